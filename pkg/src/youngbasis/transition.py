"""Transition matrices between the natural and seminormal bases.

Three independent computation routes are provided:

* :func:`transition_recursive` -- the production path: columns in depth
  order, each new column a two-term combination of one previous column
  (at most two scalar multiplications per nonzero entry),
* :func:`transition_pathsum`  -- explicit enumeration of the weighted
  subpaths of a fixed path per column (exponential; oracle),
* :func:`transition_word`     -- generator matrices applied along a
  reduced word per column (oracle).

Also here: the closed-form diagonal, the squared orthogonal diagonal,
and the wreath-product assembly by alphabets (direct sum of tensor
products of per-component symmetric-group matrices).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .algebras import AlgebraSpec, WeightScheme, seminormal_generator
from .bruhat import BruhatGraph, shortest_paths_from
from .errors import InvariantError, PreconditionError
from .linalg import Matrix, direct_sum, tensor_product
from .perms import bruhat_leq
from .shapes import Shape, Tableau

__all__ = [
    "TransitionMatrix", "OpCounter",
    "transition_recursive", "transition_pathsum", "transition_word",
    "transition_column_word", "diagonal_closed_form",
    "orthogonal_diag_squared", "grn_transition",
    "check_structure", "bench_transition",
]

PATHSUM_DEFAULT_CAP = 7


@dataclass
class OpCounter:
    """Counts exact scalar operations in the column recursion."""
    mults: int = 0
    adds: int = 0

    def total(self):
        return self.mults + self.adds


@dataclass
class TransitionMatrix:
    matrix: Matrix
    spec: AlgebraSpec
    shape: Shape
    provenance: str
    graph: BruhatGraph = dc_field(default=None, repr=False)
    ops: OpCounter = dc_field(default=None, repr=False)
    seconds: float = dc_field(default=None, repr=False)

    @property
    def basis(self):
        return self.matrix.basis

    def entry(self, s, t):
        """Entry addressed by tableaux or by row tuples."""
        i = self._index(s)
        j = self._index(t)
        return self.matrix.get(i, j)

    def _index(self, t):
        rows = t.rows if isinstance(t, Tableau) else \
            tuple(tuple(tuple(r) for r in comp) for comp in t)
        if self.graph is not None:
            return self.graph.index[rows]
        for i, node in enumerate(self.matrix.basis):
            if node.rows == rows:
                return i
        raise KeyError(rows)


def _local_generator_data(graph, ws, label):
    """Per-node (stay coefficient, move coefficient, move target) for one
    generator label: exactly what one two-term column update needs."""
    stay = []
    move = []
    for v, t in enumerate(graph.nodes):
        stay.append(ws.stay(t, label))
        target = graph.neighbors[v].get(label)
        if target is None:
            move.append(None)
        else:
            move.append((ws.move(t, label), target))
    return stay, move


class _GenData:
    def __init__(self, graph, ws):
        self.graph = graph
        self.ws = ws
        self._cache = {}

    def get(self, label):
        if label not in self._cache:
            self._cache[label] = _local_generator_data(self.graph, self.ws, label)
        return self._cache[label]


def _push_column(prev_col, stay, move, counter):
    """One recursion step: new column = generator applied to prev_col."""
    out = {}
    for u, val in prev_col.items():
        a = stay[u]
        if a:
            w = a * val
            if counter is not None:
                counter.mults += 1
            cur = out.get(u)
            if cur is None:
                out[u] = w
            else:
                if counter is not None:
                    counter.adds += 1
                cur = cur + w
                if cur:
                    out[u] = cur
                else:
                    del out[u]
        mv = move[u]
        if mv is not None:
            b, tgt = mv
            w = b * val
            if counter is not None:
                counter.mults += 1
            cur = out.get(tgt)
            if cur is None:
                out[tgt] = w
            else:
                if counter is not None:
                    counter.adds += 1
                cur = cur + w
                if cur:
                    out[tgt] = cur
                else:
                    del out[tgt]
    return out


def transition_recursive(spec, shape, graph=None, threads=1, counter=None):
    """Transition matrix by the two-term column recursion.

    Columns are computed in depth order; column C is e_C, and the column
    of T is obtained from the column of T' = s_l(T) (l the smallest
    label stepping down in weak order) by the seminormal two-term rule.
    Columns within one depth level are independent and may be computed
    by a thread pool.
    """
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    gens = _GenData(graph, ws)
    size = graph.size()
    cols = [None] * size
    cols[0] = {0: ws.field.one}
    by_depth = {}
    for v in range(size):
        by_depth.setdefault(graph.depth[v], []).append(v)
    t0 = time.perf_counter()

    def compute(v):
        u, label = graph.up_edges_into(v)[0]
        stay, move = gens.get(label)
        return _push_column(cols[u], stay, move, counter)

    for d in sorted(by_depth):
        if d == 0:
            continue
        level = by_depth[d]
        if threads > 1 and len(level) > 1:
            for v in level:  # warm the per-label cache before pooling
                gens.get(graph.up_edges_into(v)[0][1])
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for v, col in zip(level, pool.map(compute, level)):
                    cols[v] = col
        else:
            for v in level:
                cols[v] = compute(v)
    m = Matrix(size, size, ws.field, cols=cols, basis=graph.nodes)
    return TransitionMatrix(m, spec, shape, "recursive", graph=graph,
                            ops=counter, seconds=time.perf_counter() - t0)


def transition_pathsum(spec, shape, graph=None, paths=None,
                       n_cap=PATHSUM_DEFAULT_CAP):
    """Transition matrix as explicit sums of weighted subpaths.

    For each column a fixed path from C is walked; every subpath (each
    label kept or replaced by the identity, all visited tableaux
    standard) contributes the product of its step weights to the row of
    its terminal node.  Exponential in the depth; refuses shapes with
    n > n_cap unless the cap is raised.
    """
    if shape.n > n_cap:
        raise PreconditionError(
            f"pathsum oracle capped at n = {n_cap}; raise n_cap to override")
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    gens = _GenData(graph, ws)
    if paths is None:
        paths = shortest_paths_from(graph, 0)
    size = graph.size()
    m = Matrix(size, size, ws.field, basis=graph.nodes)
    one = ws.field.one
    for v in range(size):
        path = paths[v]
        bucket = {}
        steps = [gens.get(i) for i in path.labels]

        def dfs(j, node, weight):
            if j == len(steps):
                cur = bucket.get(node)
                bucket[node] = weight if cur is None else cur + weight
                return
            stay, move = steps[j]
            a = stay[node]
            if a:
                dfs(j + 1, node, weight * a)
            mv = move[node]
            if mv is not None:
                dfs(j + 1, mv[1], weight * mv[0])

        dfs(0, 0, one)
        m.cols[v] = {i: w for i, w in bucket.items() if w}
    return TransitionMatrix(m, spec, shape, "pathsum", graph=graph)


def transition_column_word(spec, shape, t, graph=None):
    """One column of the transition matrix by applying generator
    matrices along a reduced word of w_t to e_C."""
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    v = graph.index[t.rows if isinstance(t, Tableau) else t]
    path = shortest_paths_from(graph, 0)[v]
    vec = {0: ws.field.one}
    for i in path.labels:
        gen = seminormal_generator(spec, shape, i, graph=graph)
        vec = gen.apply(vec)
    return vec


def transition_word(spec, shape, graph=None):
    """Full transition matrix via the word-product route (oracle)."""
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    size = graph.size()
    gens = {}
    paths = shortest_paths_from(graph, 0)
    m = Matrix(size, size, ws.field, basis=graph.nodes)
    for v in range(size):
        vec = {0: ws.field.one}
        for i in paths[v].labels:
            if i not in gens:
                gens[i] = seminormal_generator(spec, shape, i, graph=graph)
            vec = gens[i].apply(vec)
        m.cols[v] = vec
    return TransitionMatrix(m, spec, shape, "word-product", graph=graph)


def diagonal_closed_form(spec, shape, graph=None):
    """Diagonal of the transition matrix straight from inversion sets:
    the product over inversions of (1 + a_{i,j}) or its q-analogue."""
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    out = []
    for t in graph.nodes:
        acc = ws.field.one
        for (i, j) in sorted(t.inversions):
            acc = acc * ws.diag_factor(t, i, j)
        out.append(acc)
    return out


def orthogonal_diag_squared(spec, shape, graph=None):
    """Squares of the diagonal seminormal-to-orthogonal rescaling, a
    product over inversions of (move factor)^2 / (q^{-2} - a^2); kept in
    squared form so everything stays inside the exact field."""
    if graph is None:
        graph = BruhatGraph(shape)
    ws = WeightScheme(spec, shape)
    out = []
    for t in graph.nodes:
        acc = ws.field.one
        for (i, j) in sorted(t.inversions):
            acc = acc * ws.orth_factor_squared(t, i, j)
        out.append(acc)
    return out


def _alphabets(entries, sizes):
    """Ordered set partitions of `entries` with the given block sizes,
    deterministic order."""
    entries = tuple(entries)
    if not sizes:
        yield ()
        return
    k = sizes[0]
    for chosen in combinations(entries, k):
        rest = tuple(x for x in entries if x not in chosen)
        for tail in _alphabets(rest, sizes[1:]):
            yield (chosen,) + tail


def grn_transition(shape, graph=None):
    """Wreath-product transition matrix assembled from its block
    structure: one identical tensor-product block of per-component
    symmetric-group matrices for each alphabet, re-indexed into the
    canonical basis order."""
    if not shape.is_r_partition():
        raise PreconditionError("wreath transition needs an r-partition")
    spec = AlgebraSpec("wreath_grn", shape.n, r=shape.r)
    if graph is None:
        graph = BruhatGraph(shape)
    field = WeightScheme(spec, shape).field
    comp_mats = []
    comp_tabs = []
    for outer, _inner in shape.components:
        if not outer:
            comp_mats.append(Matrix.identity(1, field))
            comp_tabs.append([None])
            continue
        comp = Shape([(outer, ())])
        tm = transition_recursive(AlgebraSpec("symmetric", comp.n), comp)
        comp_mats.append(tm.matrix)
        comp_tabs.append(tm.matrix.basis)
    block = comp_mats[0]
    for mat in comp_mats[1:]:
        block = tensor_product(block, mat)
    sizes = [shape.component_size(k) for k in range(1, shape.r + 1)]
    alphabets = list(_alphabets(range(1, shape.n + 1), sizes))
    big = direct_sum([block] * len(alphabets))
    perm = _grn_global_indices(shape, graph, alphabets, comp_tabs)
    size = graph.size()
    out = Matrix(size, size, field, basis=graph.nodes)
    for j in range(big.ncols):
        out.cols[perm[j]] = {perm[i]: v for i, v in big.cols[j].items()}
    return TransitionMatrix(out, spec, shape, "tensor", graph=graph)


def _grn_global_indices(shape, graph, alphabets, comp_tabs):
    """Global canonical index of each block-basis element, blocks by
    alphabet and row-major (leftmost component slowest) within each."""
    out = []
    for alph in alphabets:
        combos = [[]]
        for tabs in comp_tabs:
            combos = [c + [t] for c in combos for t in tabs]
        for combo in combos:
            entries = {}
            for k, tab in enumerate(combo):
                if tab is None:
                    continue
                letters = alph[k]
                for v, box in tab.box_of.items():
                    entries[(k + 1,) + box[1:]] = letters[v - 1]
            t = Tableau.from_entries(shape, entries)
            out.append(graph.index[t.rows])
    return out


def check_structure(tm):
    """Structural invariants of a computed transition matrix:
    upper-triangularity, the Bruhat zero pattern, and diagonal blocks
    per depth level.  Raises InvariantError on violation."""
    m = tm.matrix
    graph = tm.graph
    if not m.is_upper_triangular():
        raise InvariantError("transition matrix is not upper-triangular")
    words = [t.word for t in graph.nodes]
    for j, col in enumerate(m.cols):
        if j not in col or not col[j]:
            raise InvariantError(f"zero diagonal in column {j}")
        for i in col:
            if not bruhat_leq(words[i], words[j]):
                raise InvariantError(
                    f"nonzero entry at ({i},{j}) violates the Bruhat pattern")
            if graph.depth[i] == graph.depth[j] and i != j:
                raise InvariantError(
                    f"off-diagonal entry ({i},{j}) inside a depth block")
    return True


def bench_transition(spec, shape, graph=None):
    """Timing + operation-count record for one shape's recursion."""
    counter = OpCounter()
    tm = transition_recursive(spec, shape, graph=graph, counter=counter)
    f = tm.matrix.ncols
    return {
        "shape": shape.to_str(),
        "f": f,
        "seconds": tm.seconds,
        "scalar_ops": counter.total(),
        "mults": counter.mults,
        "adds": counter.adds,
        "op_bound": 2 * (f * f + f),
    }

"""The weak Bruhat graph on standard tableaux.

Nodes are the standard tableaux of a shape in canonical order; an edge
(S, T, i) means T = s_i(S) with both endpoints standard.  Depth equals
the inversion count, the column reading tableau is the unique minimum
and the row reading tableau the unique maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perms
from .errors import InvariantError, PreconditionError
from .shapes import standard_tableaux

__all__ = ["BruhatGraph", "Path", "build_graph", "bruhat_leq",
           "shortest_path", "subpaths_terminating", "to_dot"]


def bruhat_leq(u, w):
    """Strong Bruhat comparison of permutations (dominance criterion)."""
    return perms.bruhat_leq(u, w)


class BruhatGraph:
    """Immutable weak-order Hasse diagram for one shape."""

    def __init__(self, shape):
        self.shape = shape
        self.nodes = standard_tableaux(shape)
        self.index = {t.rows: i for i, t in enumerate(self.nodes)}
        self.depth = [t.depth for t in self.nodes]
        n = shape.n
        # neighbors[v][i] = endpoint of the edge labeled s_i at v, if any
        self.neighbors = []
        for t in self.nodes:
            nbrs = {}
            for i in range(1, n):
                u = t.swap(i)
                j = self.index.get(u.rows)
                if j is not None:
                    nbrs[i] = j
            self.neighbors.append(nbrs)
        self._check()

    def _check(self):
        depths = self.depth
        mins = [v for v in range(len(self.nodes)) if depths[v] == 0]
        maxd = max(depths) if depths else 0
        maxs = [v for v in range(len(self.nodes)) if depths[v] == maxd]
        if len(mins) != 1 or len(maxs) != 1:
            raise InvariantError("weak Bruhat graph lacks unique extremes")
        # connectivity by BFS over undirected edges
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in self.neighbors[v].values():
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        if len(seen) != len(self.nodes):
            raise InvariantError("weak Bruhat graph is disconnected")

    @property
    def column_node(self):
        return 0

    @property
    def row_node(self):
        return len(self.nodes) - 1

    def size(self):
        return len(self.nodes)

    def edges(self):
        """Undirected edges as (lower, upper, label), each once."""
        out = []
        for v, nbrs in enumerate(self.neighbors):
            for i, w in sorted(nbrs.items()):
                if self.depth[v] < self.depth[w]:
                    out.append((v, w, i))
        return out

    def up_edges_into(self, v):
        """Edges (u, i) with s_i(u) = v and depth(u) = depth(v) - 1."""
        return [(u, i) for i, u in sorted(self.neighbors[v].items())
                if self.depth[u] == self.depth[v] - 1]


@dataclass(frozen=True)
class Path:
    """A walk in the graph recorded as its start, labels, and nodes."""
    start: int
    labels: tuple
    nodes: tuple  # visited node indices, length = len(labels) + 1

    def end(self):
        return self.nodes[-1]


@dataclass(frozen=True)
class Subpath:
    """A subpath of a path: each label either kept (move) or replaced by
    the identity (wait)."""
    path: Path
    moves: tuple  # one bool per label of the parent path
    nodes: tuple  # visited node indices, length = len(labels) + 1

    def end(self):
        return self.nodes[-1]


def build_graph(shape):
    return BruhatGraph(shape)


def shortest_paths_from(graph, src):
    """Minimal paths from src to every node above it in weak order,
    deterministic by lexicographically smallest label sequence."""
    best = {src: ()}
    order = sorted(range(len(graph.nodes)),
                   key=lambda v: (graph.depth[v], graph.nodes[v].word))
    for v in order:
        if v == src or graph.depth[v] <= graph.depth[src]:
            continue
        cands = [best[u] + (i,) for u, i in graph.up_edges_into(v) if u in best]
        if cands:
            best[v] = min(cands)
    out = {}
    for v, labels in best.items():
        nodes = [src]
        for i in labels:
            nodes.append(graph.neighbors[nodes[-1]][i])
        out[v] = Path(src, tuple(labels), tuple(nodes))
    return out


def shortest_path(graph, src, dst):
    """A minimal path from src up to dst (see shortest_paths_from)."""
    if src == dst:
        return Path(src, (), (src,))
    if not perms.weak_leq(graph.nodes[src].word, graph.nodes[dst].word):
        raise PreconditionError("destination is not above source in weak order")
    paths = shortest_paths_from(graph, src)
    if dst not in paths:
        raise PreconditionError("no upward path found")
    return paths[dst]


def subpaths_terminating(graph, path, target):
    """All subpaths of `path` ending at node `target`.

    A subpath keeps or skips each label in turn; every visited tableau
    must be standard, i.e. every kept label must be a graph edge at the
    current node.  Depth-first keep/skip enumeration; exponential, used
    as a test oracle.
    """
    out = []
    moves = []
    nodes = [path.start]

    def rec(j):
        if j == len(path.labels):
            if nodes[-1] == target:
                out.append(Subpath(path, tuple(moves), tuple(nodes)))
            return
        i = path.labels[j]
        cur = nodes[-1]
        # wait at the current node
        moves.append(False)
        nodes.append(cur)
        rec(j + 1)
        moves.pop()
        nodes.pop()
        # move: requires s_i(cur) standard, i.e. an edge in the graph
        nxt = graph.neighbors[cur].get(i)
        if nxt is not None:
            moves.append(True)
            nodes.append(nxt)
            rec(j + 1)
            moves.pop()
            nodes.pop()

    rec(0)
    return out


def to_dot(graph):
    """Graphviz source reproducing the Hasse diagram, ranked by depth."""
    lines = ["graph weak_order {", "  rankdir=TB;",
             '  node [shape=box, fontname="monospace"];']
    for v, t in enumerate(graph.nodes):
        label = str(t.serialize()).replace(" ", "")
        lines.append(f'  n{v} [label="{label}"];')
    by_depth = {}
    for v in range(graph.size()):
        by_depth.setdefault(graph.depth[v], []).append(v)
    for d in sorted(by_depth):
        group = "; ".join(f"n{v}" for v in by_depth[d])
        lines.append(f"  {{ rank=same; {group}; }}")
    for v, w, i in graph.edges():
        lines.append(f'  n{v} -- n{w} [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

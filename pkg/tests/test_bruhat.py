from itertools import permutations

import pytest

from youngbasis import perms
from youngbasis.bruhat import (BruhatGraph, bruhat_leq, shortest_path,
                               shortest_paths_from, subpaths_terminating,
                               to_dot)
from youngbasis.errors import PreconditionError
from youngbasis.shapes import Tableau, parse_shape


def test_graph_32():
    g = BruhatGraph(parse_shape("3,2"))
    assert g.size() == 5
    assert len(g.edges()) == 5
    assert max(g.depth) == 3
    assert g.depth[g.column_node] == 0
    assert g.nodes[g.row_node].serialize() == [[[1, 2, 3], [4, 5]]]


def test_graph_skew():
    g = BruhatGraph(parse_shape("3,3,1/2,1"))
    assert g.size() == 8
    assert max(g.depth) == 4
    # top of the interval is s1 s3 s2 s1
    w = perms.word_to_perm(4, (1, 3, 2, 1))
    assert g.nodes[g.row_node].word == w


def test_graph_single_row():
    g = BruhatGraph(parse_shape("6"))
    assert g.size() == 1 and not g.edges()


def test_bruhat_leq_examples():
    s = parse_shape("3,2,1")
    g = BruhatGraph(s)
    c = g.nodes[0]
    for t in g.nodes:
        assert bruhat_leq(c.word, t.word)
        assert bruhat_leq(t.word, t.word)
    s2 = parse_shape("3,2")
    a = Tableau(s2, [[(1, 2, 5), (3, 4)]])
    b = Tableau(s2, [[(1, 3, 4), (2, 5)]])
    assert not bruhat_leq(a.word, b.word)
    assert not bruhat_leq(b.word, a.word)
    with pytest.raises(PreconditionError):
        bruhat_leq((1, 2), (1, 2, 3))


def test_bruhat_leq_matches_subword_oracle_on_s4():
    elems = list(permutations(range(1, 5)))
    for u in elems:
        for w in elems:
            assert bruhat_leq(u, w) == perms.bruhat_leq_subword(u, w)


def test_weak_order_edges_are_bruhat_comparable():
    for text in ["3,2", "3,3,1/2,1", "(2,1)|(1)"]:
        g = BruhatGraph(parse_shape(text))
        for v, w, _ in g.edges():
            assert bruhat_leq(g.nodes[v].word, g.nodes[w].word)


def test_depth_equals_inversions_and_word_length():
    for text in ["3,2,1", "4,1", "3,3,1/2,1", "(2,1)|(2)"]:
        g = BruhatGraph(parse_shape(text))
        # BFS depth from the column reading tableau
        dist = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.neighbors[v].values():
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        for v in range(g.size()):
            t = g.nodes[v]
            assert dist[v] == g.depth[v] == len(t.inversions) \
                == perms.length(t.word)


def test_shortest_path_to_displayed_tableau():
    s = parse_shape("3,2,1")
    g = BruhatGraph(s)
    t15 = Tableau(s, [[(1, 2, 3), (4, 6), (5,)]])
    p = shortest_path(g, 0, g.index[t15.rows])
    assert p.labels == (3, 2, 5, 4, 3)
    # reversed label word is a reduced word for the connecting permutation
    word = tuple(reversed(p.labels))
    assert perms.word_to_perm(6, word) == t15.word
    assert len(word) == perms.length(t15.word)


def test_shortest_path_trivial_and_top():
    g = BruhatGraph(parse_shape("3,2"))
    assert shortest_path(g, 0, 0).labels == ()
    assert len(shortest_path(g, 0, g.row_node).labels) == 3


def test_shortest_path_requires_weak_comparability():
    g = BruhatGraph(parse_shape("3,2"))
    # the two depth-1 nodes are weakly incomparable
    with pytest.raises(PreconditionError):
        shortest_path(g, 1, 2)


def test_reversed_labels_are_reduced_words_everywhere():
    for text in ["3,2", "2,2,1", "3,3,1/2,1"]:
        g = BruhatGraph(parse_shape(text))
        for v, p in shortest_paths_from(g, 0).items():
            w = perms.word_to_perm(g.shape.n, tuple(reversed(p.labels)))
            assert w == g.nodes[v].word
            assert len(p.labels) == g.depth[v]


def test_subpaths_of_displayed_path():
    s = parse_shape("3,2,1")
    g = BruhatGraph(s)
    t15 = Tableau(s, [[(1, 2, 3), (4, 6), (5,)]])
    target = Tableau(s, [[(1, 3, 5), (2, 6), (4,)]])
    p = shortest_path(g, 0, g.index[t15.rows])
    subs = subpaths_terminating(g, p, g.index[target.rows])
    assert len(subs) == 2
    assert {sp.moves for sp in subs} == {
        (False, False, True, False, True), (True, False, True, False, False)}
    # the all-wait subpath terminates at the start
    subs0 = subpaths_terminating(g, p, 0)
    assert (False,) * 5 in {sp.moves for sp in subs0}
    # keeping labels 1,2,3,5 would visit a nonstandard tableau: rejected
    all_moves = set()
    for v in range(g.size()):
        for sp in subpaths_terminating(g, p, v):
            all_moves.add(sp.moves)
    assert (True, True, True, False, True) not in all_moves


def test_subpaths_reach_only_bruhat_below():
    for text in ["3,2", "2,2,1"]:
        g = BruhatGraph(parse_shape(text))
        paths = shortest_paths_from(g, 0)
        for v, p in paths.items():
            for u in range(g.size()):
                if subpaths_terminating(g, p, u):
                    assert bruhat_leq(g.nodes[u].word, g.nodes[v].word)


def test_interval_matches_weak_order_on_permutations():
    for text in ["3,2", "2,2", "3,3,1/2,1", "(2,1)|(1)"]:
        g = BruhatGraph(parse_shape(text))
        n = g.shape.n
        wc, wr = g.nodes[0].word, g.nodes[g.row_node].word
        interval = {u for u in permutations(range(1, n + 1))
                    if perms.weak_leq(wc, u) and perms.weak_leq(u, wr)}
        assert {t.word for t in g.nodes} == interval


def test_dot_output():
    g = BruhatGraph(parse_shape("3,2"))
    dot = to_dot(g)
    assert dot.startswith("graph weak_order {")
    assert dot.count(" -- ") == 5
    assert 'label="s3"' in dot
    assert "rank=same" in dot

import pytest

from graphs import marked_graphs
from wordrep.construct import (
    all_adjacent_word,
    bipartition_recomposition,
    classify_recomposition,
    edge_join_word,
    interleaved_word,
    irreducible_recomposition_word,
    marker_extension_words,
    orient_recomposition,
    recomposition_word,
    uniform_recomposition_word,
)
from wordrep.corpus import pendant_triangle_sides, star_hub_recomposition, star_hub_sides, relabeled
from wordrep.errors import InputError
from wordrep.graph import Graph, MarkedGraph, are_isomorphic, family, join_by_edge
from wordrep.order import (
    is_transitive_orientation,
    prn,
    sink_orientation,
    source_orientation,
    transitive_orientation,
)
from wordrep.split import recompose
from wordrep.words import is_permutation_word, parse_word, representation_number, represents


def marked(text, prefix, mark):
    return MarkedGraph(relabeled(family(text), prefix), prefix + mark)


def test_interleaved_word_on_two_edges():
    a = MarkedGraph(Graph(["a", "m"], [("a", "m")]), "m")
    b = MarkedGraph(Graph(["b", "n"], [("b", "n")]), "n")
    u = interleaved_word(a, parse_word("m a"), b, parse_word("n b"))
    assert represents(u, Graph("ab", [("a", "b")]))


def test_interleaved_word_on_pendant_triangle():
    g, h = pendant_triangle_sides()
    t, u = uniform_recomposition_word(g, h)
    assert t == 2 and represents(u, recompose(g, h))


def test_interleaved_word_on_four_cycles():
    g, h = marked("cycle:4", "x", "1"), marked("cycle:4", "y", "1")
    t, u = uniform_recomposition_word(g, h)
    assert t == 2 and representation_number(recompose(g, h))[0] == 2


def test_interleaved_word_rejects_mismatched_words():
    g, h = pendant_triangle_sides()
    _, w = representation_number(g.graph)
    with pytest.raises(InputError, match="pad"):
        interleaved_word(g, w, h, parse_word(" ".join(h.graph.vertices)))


def test_marker_extension_examples():
    star = MarkedGraph(Graph("mab", [("m", "a"), ("m", "b")]), "m")
    mw = marker_extension_words(star, "source", 2)
    assert len(mw.q) == 3
    chain = MarkedGraph(Graph("ma", [("m", "a")]), "m")
    assert marker_extension_words(chain, "source", 1).q == (("m", "a"), ("m", "a"))
    c6 = marked("cycle:6", "", "1")
    assert len(marker_extension_words(c6, "source", 3).q) == 4
    with pytest.raises(InputError, match="pendant"):
        marker_extension_words(star_hub_sides()[1], "source")


def test_edge_join_examples():
    a = MarkedGraph(Graph(["a1", "a2"], [("a1", "a2")]), "a2")
    b = MarkedGraph(Graph(["b1", "b2"], [("b1", "b2")]), "b1")
    w = edge_join_word(a, b)
    assert is_permutation_word(w, 4) <= 3
    p = edge_join_word(marked("path:3", "x", "3"), marked("path:3", "y", "1"))
    assert is_permutation_word(p, 6) == 3
    assert prn(join_by_edge(marked("path:3", "x", "3"), marked("path:3", "y", "1")))[0] == 2
    c6 = marked("cycle:6", "x", "1")
    k2 = MarkedGraph(Graph(["y1", "y2"], [("y1", "y2")]), "y1")
    w = edge_join_word(c6, k2)
    assert is_permutation_word(w, 8) == 4
    assert prn(join_by_edge(c6, k2))[0] in (3, 4)


def test_recomposition_word_examples():
    p = recomposition_word(marked("path:3", "x", "3"), marked("path:3", "y", "1"))
    host = recompose(marked("path:3", "x", "3"), marked("path:3", "y", "1"))
    assert are_isomorphic(host, family("path:4")) and represents(p, host) and prn(host)[0] == 2
    g, h = marked("cycle:6", "x", "1"), marked("cycle:6", "y", "1")
    w = recomposition_word(g, h)
    assert is_permutation_word(w, 10) == 4 and prn(recompose(g, h))[0] == 3
    g, h = marked("complete-bipartite:2x3", "x", "a1"), marked("path:5", "y", "3")
    assert represents(recomposition_word(g, h), recompose(g, h))


def test_all_adjacent_examples():
    g1, g2 = star_hub_sides()
    w = all_adjacent_word(g1, g2)
    k = max(prn(g1.graph)[0], prn(g2.graph)[0])
    assert is_permutation_word(w, 6) == k == prn(star_hub_recomposition())[0]
    k3, p3 = marked("complete:3", "x", "1"), marked("path:3", "y", "1")
    w = all_adjacent_word(k3, p3)
    assert is_permutation_word(w, 4) == 2 == prn(recompose(k3, p3))[0]
    a = MarkedGraph(Graph(["a1", "a2"], [("a1", "a2")]), "a2")
    b = MarkedGraph(Graph(["b1", "b2"], [("b1", "b2")]), "b1")
    assert all_adjacent_word(a, b) == ("a1", "b2")
    with pytest.raises(InputError, match="neither"):
        all_adjacent_word(marked("path:3", "x", "1"), marked("path:3", "y", "1"))


def test_irreducible_recomposition_examples():
    cases = [
        (marked("crown:3", "x", "a1"), marked("crown:3", "y", "a1"), 3),
        (marked("cycle:6", "x", "1"), marked("cycle:6", "y", "1"), 3),
        (marked("crown:3", "x", "a1"), marked("cycle:8", "y", "1"), 3),
    ]
    for g, h, k in cases:
        w = irreducible_recomposition_word(g, h)
        n = len(g.graph) + len(h.graph) - 2
        assert is_permutation_word(w, n) == k
    g, h = cases[0][:2]
    assert prn(recompose(g, h))[0] == 3
    with pytest.raises(InputError, match="irreducible"):
        irreducible_recomposition_word(marked("path:4", "x", "1"), marked("cycle:6", "y", "1"))


def _bipartite_orientation(g):
    a, _ = g.bipartition()
    from wordrep.order import Orientation
    return Orientation((x, y) if x in a else (y, x) for x, y in g.edges)


def test_orient_recomposition_examples():
    g, h = marked("cycle:6", "x", "1"), marked("path:4", "y", "2")
    t = _bipartite_orientation(g.graph)
    t2 = _bipartite_orientation(h.graph)
    if not t.is_source(g.marked):
        t = t.reversed()
    if not t2.is_sink(h.marked):
        t2 = t2.reversed()
    out = orient_recomposition(g, t, h, t2)
    assert is_transitive_orientation(recompose(g, h), out)
    g, h = marked("path:3", "x", "1"), marked("path:4", "y", "4")
    out = orient_recomposition(g, source_orientation(g.graph, g.marked), h, sink_orientation(h.graph, h.marked))
    assert is_transitive_orientation(recompose(g, h), out)
    g, h = marked("cycle:6", "x", "1"), marked("cycle:6", "y", "1")
    out = orient_recomposition(g, source_orientation(g.graph, g.marked), h, sink_orientation(h.graph, h.marked))
    assert is_transitive_orientation(recompose(g, h), out)
    assert transitive_orientation(recompose(g, h)) is not None
    with pytest.raises(InputError, match="not a source"):
        orient_recomposition(g, sink_orientation(g.graph, g.marked), h, sink_orientation(h.graph, h.marked))


def test_bipartition_recomposition_examples():
    a = MarkedGraph(Graph(["a1", "a2"], [("a1", "a2")]), "a2")
    b = MarkedGraph(Graph(["b1", "b2"], [("b1", "b2")]), "b1")
    sides = bipartition_recomposition(a, ({"a1"}, {"a2"}), b, ({"b1"}, {"b2"}))
    assert set(sides) == {frozenset({"a1"}), frozenset({"b2"})}
    g, h = marked("path:3", "x", "3"), marked("path:3", "y", "1")
    left, right = bipartition_recomposition(g, g.graph.bipartition(), h, h.graph.bipartition())
    host = recompose(g, h)
    assert all((x in left) != (y in left) for x, y in host.edges)
    g, h = marked("cycle:6", "x", "1"), marked("cycle:6", "y", "1")
    left, right = bipartition_recomposition(g, g.graph.bipartition(), h, h.graph.bipartition())
    assert len(left | right) == 10
    with pytest.raises(InputError, match="does not cross"):
        bipartition_recomposition(a, ({"a1", "a2"}, set()), b, ({"b1"}, {"b2"}))


def test_classify_examples():
    c = classify_recomposition(*pendant_triangle_sides())
    assert c.verdict == "not-comparability" and c.reason == "neither"
    assert c.word is not None and represents(c.word, c.graph)
    c = classify_recomposition(*star_hub_sides())
    k = max(c.prn_sides)
    assert (c.verdict, c.reason, c.prn_exact) == ("comparability", "all-adjacent", k)
    c = classify_recomposition(marked("complete:3", "x", "1"), MarkedGraph(Graph(["m'", "b", "a"], [("m'", "b"), ("b", "a")]), "m'"))
    assert c.verdict == "comparability" and c.prn_exact == 2
    assert is_transitive_orientation(c.graph, c.orientation)
    c = classify_recomposition(marked("cycle:6", "x", "1"), marked("cycle:8", "y", "1"))
    assert c.prn_bounds == (3, 3) and c.prn_exact == 3
    assert "exact prn 3" in c.summary()


def test_classify_rejects_disconnected_side():
    from wordrep.errors import DisconnectedGraphError
    bad = MarkedGraph(Graph(["a", "b", "c"], [("a", "b")]), "a")
    with pytest.raises(DisconnectedGraphError):
        classify_recomposition(bad, marked("path:3", "y", "1"))


def test_classify_non_comparability_side_gets_uniform_witness():
    w5 = MarkedGraph(relabeled(family("cycle:5"), "x"), "x1")
    c = classify_recomposition(w5, marked("path:3", "y", "1"))
    assert c.verdict == "word-representable-only"
    assert represents(c.word, c.graph)


def test_single_edge_sides_against_every_small_marked_graph():
    k2 = MarkedGraph(Graph(["y1", "y2"], [("y1", "y2")]), "y1")
    for gm in marked_graphs(5, "x"):
        if transitive_orientation(gm.graph) is None:
            continue
        c = classify_recomposition(gm, k2)
        # deleting the marker of a K_2 side just relabels its neighbour
        assert c.verdict == "comparability"
        assert represents(c.word, c.graph)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from graphs import marked_pairs
from wordrep.corpus import pendant_triangle_recomposition, pendant_triangle_sides
from wordrep.errors import BudgetExceeded, InputError
from wordrep.graph import (
    FamilySpec,
    Graph,
    MarkedGraph,
    add_pendant,
    are_isomorphic,
    family,
    graph_from_dict,
    induced_subgraph,
    isomorphism,
    join_by_edge,
)
from wordrep.split import recompose


def test_graph_normalizes_and_rejects():
    g = Graph("ba", [("b", "a"), ("a", "b")])
    assert g.vertices == ("a", "b") and g.edges == (("a", "b"),)
    with pytest.raises(InputError, match="z"):
        Graph("ab", [("a", "z")])
    with pytest.raises(InputError):
        Graph("a", [("a", "a")])


def test_induced_subgraph_examples():
    k3 = Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert induced_subgraph(k3, "ab") == Graph("ab", [("a", "b")])
    tri = induced_subgraph(pendant_triangle_recomposition(), ["2", "4", "5"])
    assert tri.edges == (("2", "4"), ("2", "5"), ("4", "5"))
    assert induced_subgraph(family("path:4"), []) == Graph()
    with pytest.raises(InputError, match="'q'"):
        induced_subgraph(k3, "aq")


def test_add_pendant_examples():
    g = add_pendant(Graph("a"), "a")
    assert g == Graph(["a", "a′"], [("a", "a′")])
    k3 = add_pendant(family("complete:3"), "1")
    assert len(k3.edges) == 4 and k3.neighbors("1′") == {"1"}
    c4 = add_pendant(family("cycle:4"), "2")
    assert c4.degree_sequence() == (1, 2, 2, 2, 3)
    with pytest.raises(InputError):
        add_pendant(c4, "9")


def test_join_by_edge_examples():
    a = MarkedGraph(Graph(["a1", "a2"], [("a1", "a2")]), "a2")
    b = MarkedGraph(Graph(["b1", "b2"], [("b1", "b2")]), "b1")
    assert are_isomorphic(join_by_edge(a, b), family("path:4"))
    g, h = pendant_triangle_sides()
    joined = join_by_edge(g, h)
    assert len(joined) == 8
    assert len(joined.edges) == len(g.graph.edges) + len(h.graph.edges) + 1
    assert joined.has_edge("m", "m'")
    with pytest.raises(InputError, match="collide: a1, a2"):
        join_by_edge(a, a)


def test_families():
    assert len(family("complete:3").edges) == 3
    crown = family("crown:3")
    assert len(crown) == 6 and len(crown.edges) == 6
    assert set(crown.degree_sequence()) == {2} and crown.is_bipartite()
    assert are_isomorphic(family("cycle:6"), Graph("123456", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")]))
    assert len(family("complete-bipartite:2x3").edges) == 6
    for bad in ("path:0", "cycle:2", "wheel:5", "crown:x"):
        with pytest.raises(InputError):
            FamilySpec.parse(bad)


def test_isomorphism_examples():
    k3 = family("complete:3")
    assert are_isomorphic(k3, family("cycle:3"))
    assert not are_isomorphic(family("path:4"), family("star:3"))
    with pytest.raises(BudgetExceeded, match="instance too large for exact isomorphism"):
        are_isomorphic(family("path:13"), family("path:13"))


def test_marked_subgraph_of_recomposition_is_a_side():
    g, h = pendant_triangle_sides()
    host = recompose(g, h)
    assert are_isomorphic(induced_subgraph(host, ["1", "2", "4"]), g.graph)


def test_both_sides_are_induced_subgraphs_of_recompositions():
    for gm, hm in marked_pairs(4):
        host = recompose(gm, hm)
        b = min(hm.marker_neighbors)
        a = min(gm.marker_neighbors)
        assert are_isomorphic(induced_subgraph(host, gm.rest + (b,)), gm.graph)
        assert are_isomorphic(induced_subgraph(host, hm.rest + (a,)), hm.graph)


def test_graph_json_parsing():
    gm = graph_from_dict({"vertices": ["m'", "3", "4", "5", "6"],
                          "edges": [["m'", "4"], ["m'", "5"], ["4", "5"], ["3", "4"], ["5", "6"]],
                          "marked": "m'"})
    assert isinstance(gm, MarkedGraph) and len(gm.graph) == 5
    assert graph_from_dict(gm.to_dict()) == gm
    with pytest.raises(InputError, match="unknown vertex"):
        graph_from_dict({"vertices": ["a"], "edges": [["a", "b"]]})
    with pytest.raises(InputError, match="'vertices'"):
        graph_from_dict({"edges": []})
    with pytest.raises(InputError, match="no neighbours"):
        graph_from_dict({"vertices": ["a", "b"], "marked": "a"})


def test_dot_is_deterministic():
    g = family("cycle:4")
    assert g.to_dot() == Graph(reversed(g.vertices), reversed(g.edges)).to_dot()
    assert '"1" -- "2";' in g.to_dot()


def _shuffled(g: Graph, rng) -> Graph:
    labels = list(g.vertices)
    rng.shuffle(labels)
    return g.relabel({v: "v" + w for v, w in zip(g.vertices, labels)})


@settings(max_examples=60, deadline=None)
@given(graphs(1, 8), graphs(1, 8), st.integers(0, 10**6))
def test_isomorphism_is_an_equivalence(g, h, seed):
    rng = random.Random(seed)
    assert are_isomorphic(g, g)
    assert are_isomorphic(g, h) == are_isomorphic(h, g)
    g2 = _shuffled(g, rng)
    assert are_isomorphic(g, g2)
    m = isomorphism(g, g2)
    assert all(g2.has_edge(m[a], m[b]) for a, b in g.edges)
    g3 = _shuffled(g2, rng)
    assert are_isomorphic(g, g3) and are_isomorphic(g2, g3)
    assert are_isomorphic(g, h) == are_isomorphic(g2, h)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from graphs import connected_graphs, random_graph
from wordrep.corpus import pendant_triangle_recomposition, star_hub_recomposition, star_hub_sides
from wordrep.errors import BudgetExceeded, InputError, NotComparabilityError
from wordrep.graph import Graph, add_pendant, family, induced_subgraph
from wordrep.order import (
    Orientation,
    Poset,
    Realizer,
    dimension,
    dimension_by_enumeration,
    enumerate_transitive_orientations,
    extend_realizer,
    induced_poset,
    is_all_adjacent,
    is_prn_irreducible,
    is_source_feasible,
    is_transitive_orientation,
    poset_from_orientation,
    prn,
    source_feasible_by_enumeration,
    source_orientation,
    transitive_orientation,
)
from wordrep.words import represents


def test_orientation_examples():
    c6 = family("cycle:6")
    a, b = c6.bipartition()
    t = transitive_orientation(c6)
    assert t is not None and is_transitive_orientation(c6, t)
    a_to_b = Orientation((x, y) if x in a else (y, x) for x, y in c6.edges)
    assert is_transitive_orientation(c6, a_to_b)
    assert transitive_orientation(pendant_triangle_recomposition()) is None
    assert transitive_orientation(star_hub_recomposition()) is not None
    assert transitive_orientation(family("cycle:5")) is None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_orientation_search_matches_enumeration(n):
    for g in connected_graphs(n, n):
        found = transitive_orientation(g)
        every = list(enumerate_transitive_orientations(g))
        assert (found is not None) == bool(every)
        if found is not None:
            assert found in every


def test_poset_from_orientation_examples():
    p3 = Graph("abc", [("a", "b"), ("b", "c")])
    with pytest.raises(InputError, match="not transitive"):
        poset_from_orientation(p3, Orientation([("a", "b"), ("b", "c")]))
    p = poset_from_orientation(p3, Orientation([("a", "b"), ("c", "b")]))
    assert p.lt("a", "b") and p.lt("c", "b") and not p.comparable("a", "c")
    k3 = Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    chain = poset_from_orientation(k3, Orientation([("a", "b"), ("b", "c"), ("a", "c")]))
    assert chain.lt("a", "c") and dimension(chain)[0] == 1
    assert chain.comparability_graph() == k3


def test_dimension_examples():
    assert dimension(Poset("ab", []))[0] == 2
    crown = family("crown:3")
    # the standard example: a_i < b_j exactly when i != j
    std = Poset(crown.vertices, [(a, b) for a, b in crown.edges])
    k, r = dimension(std)
    assert k == 3 and r.realizes(std)
    with pytest.raises(BudgetExceeded, match="unknown above k_max=2"):
        dimension(std, k_max=2)


def test_prn_examples():
    for n in range(1, 7):
        assert prn(family(f"complete:{n}"))[0] == 1
    for n in range(3, 9):
        assert prn(family(f"path:{n}"))[0] == 2
    assert prn(family("cycle:6"))[0] == 3
    assert prn(family("cycle:8"))[0] == 3
    assert prn(family("crown:3"))[0] == 3
    k, w, r = prn(family("crown:4"))
    assert k == 4 and represents(w, family("crown:4"))
    with pytest.raises(NotComparabilityError):
        prn(family("cycle:5"))


def _comparability_posets(max_n):
    for g in connected_graphs(max_n, 2):
        t = transitive_orientation(g)
        if t is not None:
            yield g, poset_from_orientation(g, t)


def test_dimension_matches_brute_force():
    for g, p in _comparability_posets(6):
        assert dimension(p)[0] == dimension_by_enumeration(p, 4)


def test_dimension_does_not_depend_on_orientation():
    for g, _ in _comparability_posets(5):
        values = {dimension(poset_from_orientation(g, t))[0] for t in enumerate_transitive_orientations(g)}
        assert len(values) == 1


def test_source_feasibility_examples():
    star = family("star:2")
    assert is_source_feasible(star, "c")
    g2 = star_hub_sides()[1].graph
    assert not is_source_feasible(g2, "b")
    for v in family("complete:4").vertices:
        assert is_source_feasible(family("complete:4"), v)
    with pytest.raises(NotComparabilityError):
        is_source_feasible(family("cycle:5"), "1")
    t = source_orientation(family("path:5"), "3")
    assert t.is_source("3")


def test_source_feasibility_matches_enumeration_up_to_six():
    for g in connected_graphs(6, 2):
        if transitive_orientation(g) is None:
            continue
        for v in g.vertices:
            assert is_source_feasible(g, v) == source_feasible_by_enumeration(g, v)


def test_all_adjacent_examples():
    assert all(is_all_adjacent(family("complete:4"), v) for v in "1234")
    star = family("star:3")
    assert is_all_adjacent(star, "c") and not is_all_adjacent(star, "1")
    assert is_all_adjacent(star_hub_sides()[0].graph, "a")


def test_extend_realizer_examples():
    star = Poset("mab", [("m", "a"), ("m", "b")])
    out = extend_realizer(Realizer((("a", "b"), ("b", "a"))), star, "m")
    assert out.orders == (("m", "a", "b"), ("m", "b", "a"), ("m", "b", "a"))
    chain = Poset("ma", [("m", "a")])
    assert extend_realizer(Realizer((("a",),)), chain, "m").orders == (("m", "a"), ("m", "a"))
    with pytest.raises(InputError, match="not minimal"):
        extend_realizer(Realizer((("m",),)), chain, "a")
    with pytest.raises(InputError, match="not a realizer"):
        extend_realizer(Realizer((("a", "b"),)), star, "m")
    sink = extend_realizer(Realizer((("m",),)), chain, "a", role="sink")
    assert sink.realizes(chain)


def test_extend_realizer_on_crown_with_new_minimum():
    crown = family("crown:3")
    g = Graph(crown.vertices + ("m",), crown.edges + tuple(("m", v) for v in crown.vertices))
    p = Poset(g.vertices, list(crown.edges) + [("m", v) for v in crown.vertices])
    k, r = dimension(p.restrict(crown.vertices))
    out = extend_realizer(r, p, "m")
    assert len(out) == k + 1 and out.realizes(p)


def test_irreducibility_examples():
    assert (is_prn_irreducible(family("crown:3")).prn, is_prn_irreducible(family("crown:3")).irreducible) == (3, True)
    r = is_prn_irreducible(family("cycle:6"))
    assert r.prn == 3 and r.irreducible
    r = is_prn_irreducible(family("edgeless:2"))
    assert r.prn == 2 and r.irreducible
    r = is_prn_irreducible(family("path:5"))
    assert not r.irreducible and r.witness is not None


@settings(max_examples=30, deadline=None)
@given(graphs(2, 7), st.data())
def test_prn_is_monotone_under_induced_subgraphs(g, data):
    if transitive_orientation(g) is None:
        return
    sub = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1))
    assert prn(induced_subgraph(g, sub))[0] <= prn(g)[0]


@settings(max_examples=30, deadline=None)
@given(graphs(2, 7))
def test_prn_witness_represents(g):
    if transitive_orientation(g) is None:
        return
    k, w, r = prn(g)
    assert represents(w, g) and len(r) == k


def test_pendant_leaf_is_fresh():
    g = Graph(["a", "a′"], [("a", "a′")])
    h = add_pendant(g, "a")
    assert len(h) == 3 and "a′2" in h.vertices


def test_random_orientations_are_transitive():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        t = transitive_orientation(g)
        if t is not None:
            assert is_transitive_orientation(g, t)

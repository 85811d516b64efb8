"""Built-in worked examples with their known outcomes.

``run_examples`` evaluates each one and reports pass/fail; the CLI's
``paper-examples`` command exits non-zero on any mismatch.
"""

from __future__ import annotations

from typing import Callable

from .construct import classify_recomposition
from .graph import Graph, MarkedGraph, family
from .order import is_all_adjacent, is_prn_irreducible, is_source_feasible, prn, transitive_orientation
from .split import recompose
from .words import alternate, parse_word, project, represents


def pendant_triangle_sides() -> tuple[MarkedGraph, MarkedGraph]:
    """A path marked at an end, and a triangle with a pendant on each
    unmarked corner, marked at the remaining corner."""
    g = MarkedGraph(Graph(["1", "2", "m"], [("1", "2"), ("2", "m")]), "m")
    h = MarkedGraph(
        Graph(["m'", "3", "4", "5", "6"],
              [("m'", "4"), ("m'", "5"), ("4", "5"), ("3", "4"), ("5", "6")]),
        "m'",
    )
    return g, h


def pendant_triangle_recomposition() -> Graph:
    return Graph("123456", [("1", "2"), ("2", "4"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6")])


def star_hub_sides() -> tuple[MarkedGraph, MarkedGraph]:
    """A two-leaf star marked at its centre, and the pendant triangle."""
    g1 = MarkedGraph(Graph(["a", "1", "2"], [("a", "1"), ("a", "2")]), "a")
    g2 = MarkedGraph(
        Graph(["b", "3", "4", "5", "6"],
              [("b", "4"), ("b", "5"), ("4", "5"), ("3", "4"), ("5", "6")]),
        "b",
    )
    return g1, g2


def star_hub_recomposition() -> Graph:
    return Graph(
        "123456",
        [("1", "4"), ("1", "5"), ("2", "4"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
    )


def relabeled(g: Graph, prefix: str) -> Graph:
    return g.relabel({v: prefix + v for v in g.vertices})


def _crown_pair() -> tuple[MarkedGraph, MarkedGraph]:
    return (
        MarkedGraph(relabeled(family("crown:3"), "x"), "xa1"),
        MarkedGraph(relabeled(family("crown:3"), "y"), "ya1"),
    )


def _cycle_pair() -> tuple[MarkedGraph, MarkedGraph]:
    return (
        MarkedGraph(relabeled(family("cycle:6"), "x"), "x1"),
        MarkedGraph(relabeled(family("cycle:8"), "y"), "y1"),
    )


def _pendant_on_triangle() -> tuple[MarkedGraph, MarkedGraph]:
    p3 = Graph(["m'", "b", "a"], [("m'", "b"), ("b", "a")])
    return MarkedGraph(family("complete:3"), "1"), MarkedGraph(p3, "m'")


def _check(expected, actual) -> tuple[bool, str]:
    return expected == actual, f"expected {expected!r}, got {actual!r}"


EXAMPLES: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("projection of baabdca onto {a,b}",
     lambda: _check(parse_word("b a a b a"), project(parse_word("b a a b d c a"), "ab"))),
    ("a and b do not alternate in baabdca",
     lambda: _check(False, alternate(parse_word("b a a b d c a"), "a", "b"))),
    ("b a m′ b m′ a represents P3",
     lambda: _check(True, represents(parse_word("b a m′ b m′ a"),
                                     Graph(["a", "b", "m′"], [("a", "b"), ("b", "m′")])))),
    ("path glued to the pendant triangle",
     lambda: _check(pendant_triangle_recomposition(), recompose(*pendant_triangle_sides()))),
    ("path glued to the pendant triangle is not comparability",
     lambda: _check("not-comparability", classify_recomposition(*pendant_triangle_sides()).verdict)),
    ("star hub glued to the pendant triangle",
     lambda: _check(star_hub_recomposition(), recompose(*star_hub_sides()))),
    ("star hub marker a is all-adjacent",
     lambda: _check(True, is_all_adjacent(star_hub_sides()[0].graph, "a"))),
    ("pendant-triangle marker b is never a source or sink",
     lambda: _check(False, is_source_feasible(star_hub_sides()[1].graph, "b"))),
    ("star hub recomposition is comparability via the all-adjacent marker",
     lambda: _check(("comparability", "all-adjacent"),
                    (lambda c: (c.verdict, c.reason))(classify_recomposition(*star_hub_sides())))),
    ("prn(K_5) = 1", lambda: _check(1, prn(family("complete:5"))[0])),
    ("prn(P_6) = 2", lambda: _check(2, prn(family("path:6"))[0])),
    ("prn(C_6) = 3", lambda: _check(3, prn(family("cycle:6"))[0])),
    ("prn(crown H_3,3) = 3", lambda: _check(3, prn(family("crown:3"))[0])),
    ("prn(crown H_4,4) = 4", lambda: _check(4, prn(family("crown:4"))[0])),
    ("C_6 is 3-prn-irreducible", lambda: _check(3, is_prn_irreducible(family("cycle:6")).prn)),
    ("C_6 irreducibility holds", lambda: _check(True, is_prn_irreducible(family("cycle:6")).irreducible)),
    ("crown H_4,4 is 4-prn-irreducible",
     lambda: _check((4, True), (lambda r: (r.prn, r.irreducible))(is_prn_irreducible(family("crown:4"))))),
    ("edgeless graph on two vertices is 2-prn-irreducible",
     lambda: _check((2, True), (lambda r: (r.prn, r.irreducible))(is_prn_irreducible(family("edgeless:2"))))),
    ("triangle with a pendant has prn 2",
     lambda: _check(2, classify_recomposition(*_pendant_on_triangle()).prn_exact)),
    ("crown recomposition has prn 3",
     lambda: _check(3, classify_recomposition(*_crown_pair()).prn_exact)),
    ("C_6 and C_8 recomposition has prn 3",
     lambda: _check(3, classify_recomposition(*_cycle_pair()).prn_exact)),
    ("crown recomposition is not prn-irreducible",
     lambda: _check(False, is_prn_irreducible(recompose(*_crown_pair())).irreducible)),
    ("C_6 and C_8 recomposition is not prn-irreducible",
     lambda: _check(False, is_prn_irreducible(recompose(*_cycle_pair())).irreducible)),
    ("bipartite recomposition is comparability",
     lambda: _check(True, transitive_orientation(recompose(
         MarkedGraph(relabeled(family("complete-bipartite:2x3"), "x"), "xa1"),
         MarkedGraph(relabeled(family("path:5"), "y"), "y3"))) is not None)),
]


def run_examples() -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in EXAMPLES:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a mismatch, reported not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results

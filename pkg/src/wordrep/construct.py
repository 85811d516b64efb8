"""Certificate constructions for split recompositions.

Every function here builds a word or orientation explicitly and checks it
against the target graph before returning it; a failed check raises
VerificationError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, InputError, NotComparabilityError, VerificationError
from .graph import Graph, MarkedGraph, join_by_edge
from .order import (
    Orientation,
    dimension,
    induced_poset,
    is_all_adjacent,
    is_prn_irreducible,
    is_source_feasible,
    orientation_violation,
    prn,
    sink_orientation,
    source_orientation,
    transitive_orientation,
)
from .split import _require_connected, recompose
from .words import (
    REPNUM_MAX_VERTICES,
    Word,
    cyclic_shift_normalize,
    pad_uniform,
    represents,
    representation_number,
    uniformity,
)

Perm = tuple

EXACT_PRN_MAX_VERTICES = 14


def _flatten(perms: Sequence[Perm]) -> Word:
    return tuple(x for p in perms for x in p)


def _restrict(p: Perm, keep) -> Perm:
    return tuple(x for x in p if x in keep)


def _verify(word: Word, g: Graph, what: str) -> Word:
    if not represents(word, g):
        raise VerificationError(f"{what} does not represent its target graph")
    return word


def _blocks(w: Word, m: str, mode: str) -> list[Word]:
    """Split a normalized word into the pieces between copies of `m`."""
    out, cur = [], []
    letters = w if mode == "suffix" else w[1:] + (m,)
    for x in letters:
        if x == m:
            out.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    return out


def interleaved_word(gm: MarkedGraph, w: Word, hm: MarkedGraph, w2: Word) -> Word:
    """k-uniform word for the recomposition from k-uniform words of both sides.

    `w` is rotated to end in the marker and `w2` to start with its marker;
    the blocks between marker copies are then interleaved and the markers
    dropped.
    """
    k, k2 = uniformity(w), uniformity(w2)
    if k is None or k2 is None:
        raise InputError("both words must be uniform")
    if k != k2:
        raise InputError(f"words are {k}- and {k2}-uniform; pad them to a common k first")
    if not represents(w, gm.graph) or not represents(w2, hm.graph):
        raise InputError("input words must represent their marked graphs")
    left = _blocks(cyclic_shift_normalize(w, gm.marked, "suffix"), gm.marked, "suffix")
    right = _blocks(cyclic_shift_normalize(w2, hm.marked, "prefix"), hm.marked, "prefix")
    u = tuple(x for a, b in zip(left, right) for x in a + b)
    return _verify(u, recompose(gm, hm), "interleaved word")


def uniform_recomposition_word(
    gm: MarkedGraph, hm: MarkedGraph, k_max: int = 3, max_vertices: int = REPNUM_MAX_VERTICES
) -> tuple[int, Word]:
    """Search both sides' representation numbers, pad to the larger, interleave."""
    k, w = representation_number(gm.graph, k_max, max_vertices)
    k2, w2 = representation_number(hm.graph, k_max, max_vertices)
    t = max(k, k2)
    w = pad_uniform(w, gm.graph, t)
    w2 = pad_uniform(w2, hm.graph, t)
    return t, interleaved_word(gm, w, hm, w2)


@dataclass(frozen=True)
class MarkerWords:
    """Permutations on the unmarked part and their extension to the marker.

    ``p`` realizes the poset on the vertices other than the marker, under
    ``orientation`` (marker a source or a sink); ``q`` has one more
    permutation and represents the whole graph.
    """

    p: tuple[Perm, ...]
    q: tuple[Perm, ...]
    orientation: Orientation


def _role_orientation(gm: MarkedGraph, role: str) -> Orientation:
    if role == "source":
        t = source_orientation(gm.graph, gm.marked)
    elif role == "sink":
        t = sink_orientation(gm.graph, gm.marked)
    else:
        raise InputError(f"unknown role {role!r}")
    if t is None:
        raise InputError(
            f"{gm.marked!r} is not a {role} of any transitive orientation "
            "(the graph with a pendant on it is not a comparability graph)"
        )
    return t


def _subposet_realizer(gm: MarkedGraph, role: str, size: int | None):
    t = _role_orientation(gm, role)
    sub = induced_poset(gm.graph, t).restrict(gm.rest)
    d, realizer = dimension(sub)
    if size is None:
        size = d
    if size < d:
        raise InputError(f"{size} permutations cannot realize a poset of dimension {d}")
    return realizer.padded(size).orders, t


def marker_extension_words(gm: MarkedGraph, role: str = "source", k: int | None = None) -> MarkerWords:
    """The p- and q-permutations for a marker that is a source or a sink.

    `k` defaults to the prn of the whole marked graph.
    """
    if transitive_orientation(gm.graph) is None:
        raise NotComparabilityError("marked graph is not a comparability graph")
    if k is None:
        k = prn(gm.graph)[0]
    p, t = _subposet_realizer(gm, role, k)
    m, nbrs = gm.marked, gm.marker_neighbors
    last = p[-1]
    far = tuple(x for x in last if x not in nbrs)
    near = tuple(x for x in last if x in nbrs)
    if role == "source":
        q = tuple((m,) + pi for pi in p) + (far + (m,) + near,)
    else:
        q = tuple(pi + (m,) for pi in p) + (near + (m,) + far,)
    g = gm.graph
    _verify(_flatten(p), g.remove_vertex(m), "p-permutations")
    _verify(_flatten(q), g, "q-permutations")
    return MarkerWords(p, q, t)


def edge_join_word(gm: MarkedGraph, hm: MarkedGraph) -> Word:
    """Permutation word for the two graphs joined by an edge between markers.

    Needs the first marker to be a possible source and the second a possible
    sink; uses 1 + max(prn) permutations.
    """
    k, k2 = prn(gm.graph)[0], prn(hm.graph)[0]
    a = marker_extension_words(gm, "source", k)
    b = marker_extension_words(hm, "sink", k2)
    m, m2 = gm.marked, hm.marked
    p, p2 = a.p, b.p
    # with a single permutation per side the first block must already put
    # m' ahead of V, or V\N(m) and V' could alternate
    if max(k, k2) == 1:
        u = [p2[0] + (m, m2) + p[0]]
    else:
        u = [p2[0] + (m,) + p[0] + (m2,)]
    for i in range(1, max(k, k2)):
        u.append(p2[min(i, k2 - 1)] + (m, m2) + p[min(i, k - 1)])
    u.append(a.q[-1] + b.q[-1])
    return _verify(_flatten(u), join_by_edge(gm, hm), "edge-join word")


def _glue(p, p2, nbrs, nbrs2) -> list[Perm]:
    """Pair up the two sides' permutations, padding the shorter list with its
    last one, then append the closing permutation that separates the
    markers' neighbourhoods."""
    a, b = len(p), len(p2)
    out = [p2[min(i, b - 1)] + p[min(i, a - 1)] for i in range(max(a, b))]
    last, last2 = p[-1], p2[-1]
    out.append(
        tuple(x for x in last if x not in nbrs)
        + tuple(x for x in last2 if x in nbrs2)
        + tuple(x for x in last if x in nbrs)
        + tuple(x for x in last2 if x not in nbrs2)
    )
    return out


def recomposition_word(gm: MarkedGraph, hm: MarkedGraph) -> Word:
    """Permutation word with 1 + max(prn) permutations for a source/sink pair."""
    k, k2 = prn(gm.graph)[0], prn(hm.graph)[0]
    p, _ = _subposet_realizer(gm, "source", k)
    p2, _ = _subposet_realizer(hm, "sink", k2)
    v = _glue(p, p2, gm.marker_neighbors, hm.marker_neighbors)
    return _verify(_flatten(v), recompose(gm, hm), "recomposition word")


def irreducible_recomposition_word(gm: MarkedGraph, hm: MarkedGraph) -> Word:
    """Permutation word with max(prn) permutations for two prn-irreducible
    graphs whose markers are a possible source and sink."""
    ig, ih = is_prn_irreducible(gm.graph), is_prn_irreducible(hm.graph)
    if not (ig.irreducible and ih.irreducible) or min(ig.prn, ih.prn) < 3:
        raise InputError("both graphs must be k-prn-irreducible with k >= 3")
    p, _ = _subposet_realizer(gm, "source", ig.prn - 1)
    p2, _ = _subposet_realizer(hm, "sink", ih.prn - 1)
    v = _glue(p, p2, gm.marker_neighbors, hm.marker_neighbors)
    return _verify(_flatten(v), recompose(gm, hm), "irreducible recomposition word")


def all_adjacent_word(gm: MarkedGraph, hm: MarkedGraph) -> Word:
    """Permutation word with max(prn) permutations when a marker sees its whole graph.

    The marker's copy in the other side's permutations is replaced by this
    side's permutation with its own marker removed.
    """
    if is_all_adjacent(gm.graph, gm.marked):
        outer, inner = hm, gm
    elif is_all_adjacent(hm.graph, hm.marked):
        outer, inner = gm, hm
    else:
        raise InputError("neither marked vertex is adjacent to all other vertices")
    _, _, r_out = prn(outer.graph)
    _, _, r_in = prn(inner.graph)
    t = max(len(r_out), len(r_in))
    outs, ins = r_out.padded(t).orders, r_in.padded(t).orders
    u = []
    for po, pi in zip(outs, ins):
        body = tuple(x for x in pi if x != inner.marked)
        j = po.index(outer.marked)
        u.append(po[:j] + body + po[j + 1:])
    return _verify(_flatten(u), recompose(gm, hm), "all-adjacent word")


def orient_recomposition(
    gm: MarkedGraph, t: Orientation, hm: MarkedGraph, t2: Orientation
) -> Orientation:
    """Transitive orientation of the recomposition; `t` must make the first
    marker a source and `t2` the second a sink."""
    for g, tt in ((gm.graph, t), (hm.graph, t2)):
        bad = orientation_violation(g, tt)
        if bad is not None:
            raise InputError(f"input orientation is not transitive: {bad}")
    if not t.is_source(gm.marked):
        raise InputError(f"{gm.marked!r} is not a source of the first orientation")
    if not t2.is_sink(hm.marked):
        raise InputError(f"{hm.marked!r} is not a sink of the second orientation")
    arcs = set(t.restrict(gm.rest).arcs) | set(t2.restrict(hm.rest).arcs)
    arcs |= {(b, a) for a in gm.marker_neighbors for b in hm.marker_neighbors}
    out = Orientation(arcs)
    bad = orientation_violation(recompose(gm, hm), out)
    if bad is not None:
        raise VerificationError(f"recomposed orientation fails: {bad}")
    return out


def _check_bipartition(g: Graph, a_side, b_side) -> None:
    a_side, b_side = set(a_side), set(b_side)
    if a_side & b_side or a_side | b_side != set(g.vertices):
        raise InputError("bipartition sides must partition the vertex set")
    for x, y in g.edges:
        if (x in a_side) == (y in a_side):
            raise InputError(f"edge {x}-{y} does not cross the bipartition")


def bipartition_recomposition(gm: MarkedGraph, parts, hm: MarkedGraph, parts2):
    """Bipartition of the recomposition of two bipartite graphs."""
    a, b = (frozenset(s) for s in parts)
    a2, b2 = (frozenset(s) for s in parts2)
    _check_bipartition(gm.graph, a, b)
    _check_bipartition(hm.graph, a2, b2)
    if gm.marked in b:
        a, b = b, a
    if hm.marked in b2:
        a2, b2 = b2, a2
    left = (a - {gm.marked}) | b2
    right = (a2 - {hm.marked}) | b
    _check_bipartition(recompose(gm, hm), left, right)
    return left, right


def orientation_from_permutations(g: Graph, w: Word) -> Orientation:
    """Orient each edge by the order of its ends in the first permutation."""
    n = len(g)
    pos = {x: i for i, x in enumerate(w[:n])}
    return Orientation((a, b) if pos[a] < pos[b] else (b, a) for a, b in g.edges)


@dataclass
class RecompositionCertificate:
    verdict: str
    reason: str
    graph: Graph
    word: Word | None = None
    word_kind: str | None = None
    orientation: Orientation | None = None
    prn_sides: tuple[int, int] | None = None
    prn_bounds: tuple[int, int] | None = None
    prn_exact: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def blocks(self) -> int | None:
        if self.word is None or not len(self.graph):
            return None
        return len(self.word) // len(self.graph)

    def summary(self) -> str:
        why = {
            "source-sink": "markers are a possible source and a possible sink",
            "all-adjacent": "a marker is adjacent to every other vertex of its graph",
            "neither": "no marker is all-adjacent and the markers are not a source/sink pair",
        }[self.reason]
        line = f"{self.verdict} ({why})"
        if self.prn_bounds is not None:
            lo, hi = self.prn_bounds
            line += f"; prn in {{{lo}}}" if lo == hi else f"; prn in {{{lo}, {hi}}}"
        if self.prn_exact is not None:
            line += f"; exact prn {self.prn_exact}"
        return line

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "graph": self.graph.to_dict(),
            "witness_word": None if self.word is None else list(self.word),
            "witness_kind": self.word_kind,
            "witness_blocks": self.blocks,
            "witness_orientation": (
                None if self.orientation is None else [list(a) for a in self.orientation.sorted_arcs()]
            ),
            "prn_sides": None if self.prn_sides is None else list(self.prn_sides),
            "prn_bounds": None if self.prn_bounds is None else list(self.prn_bounds),
            "prn_exact": self.prn_exact,
            "notes": list(self.notes),
        }


def classify_recomposition(
    gm: MarkedGraph,
    hm: MarkedGraph,
    exact_limit: int = EXACT_PRN_MAX_VERTICES,
    k_max: int = 3,
) -> RecompositionCertificate:
    """Decide whether the recomposition is a comparability graph, with witnesses.

    The verdict is cross-checked against a direct orientation search on the
    recomposed graph; when it has at most `exact_limit` vertices its exact
    prn is also computed and checked against the bounds.
    """
    for g in (gm.graph, hm.graph):
        _require_connected(g)
    target = recompose(gm, hm)
    notes = []
    if min(len(gm.graph), len(hm.graph)) == 2:
        notes.append("a side has only two vertices (marker and one neighbour)")
    direct = transitive_orientation(target)

    comparable_sides = all(transitive_orientation(x.graph) is not None for x in (gm, hm))
    if not comparable_sides:
        if direct is not None:
            raise VerificationError("recomposition is comparability but a side is not")
        cert = RecompositionCertificate("not-comparability", "neither", target, notes=notes)
        notes.append("a side is not a comparability graph")
        try:
            _, cert.word = uniform_recomposition_word(gm, hm, k_max)
            cert.verdict = "word-representable-only"
            cert.word_kind = "uniform"
        except BudgetExceeded as exc:
            notes.append(f"no uniform witness: {exc}")
        return cert

    k, k2 = prn(gm.graph)[0], prn(hm.graph)[0]
    kappa = max(k, k2)
    feasible = is_source_feasible(gm.graph, gm.marked) and is_source_feasible(hm.graph, hm.marked)
    adjacent = is_all_adjacent(gm.graph, gm.marked) or is_all_adjacent(hm.graph, hm.marked)
    cert = RecompositionCertificate("comparability", "neither", target, prn_sides=(k, k2), notes=notes)

    if feasible:
        cert.reason = "source-sink"
        notes.append("source and sink feasibility are decided independently per side")
        t = _role_orientation(gm, "source")
        t2 = _role_orientation(hm, "sink")
        cert.orientation = orient_recomposition(gm, t, hm, t2)
    elif adjacent:
        cert.reason = "all-adjacent"
    else:
        if direct is not None:
            raise VerificationError("recomposition is comparability but no condition holds")
        cert.verdict = "not-comparability"
        try:
            _, cert.word = uniform_recomposition_word(gm, hm, k_max)
            cert.word_kind = "uniform"
        except BudgetExceeded as exc:
            notes.append(f"no uniform witness: {exc}")
        return cert

    if direct is None:
        raise VerificationError("a sufficient condition holds but the recomposition is not comparability")

    if adjacent:
        cert.word = all_adjacent_word(gm, hm)
        cert.prn_bounds = (kappa, kappa)
        notes.append("all-adjacent marker: prn equals the larger side")
    else:
        irreducible = (
            min(k, k2) >= 3
            and is_prn_irreducible(gm.graph).irreducible
            and is_prn_irreducible(hm.graph).irreducible
        )
        if irreducible:
            cert.word = irreducible_recomposition_word(gm, hm)
            cert.prn_bounds = (kappa, kappa)
            notes.append("both sides prn-irreducible: prn equals the larger side")
        else:
            cert.word = recomposition_word(gm, hm)
            cert.prn_bounds = (kappa, kappa + 1)
    cert.word_kind = "permutation"
    if cert.orientation is None:
        cert.orientation = orientation_from_permutations(target, cert.word)
        bad = orientation_violation(target, cert.orientation)
        if bad is not None:
            raise VerificationError(f"orientation read off the witness word fails: {bad}")
    if cert.blocks is not None and cert.blocks > cert.prn_bounds[1]:
        raise VerificationError("witness word uses more permutations than the upper bound")

    if len(target) <= exact_limit:
        cert.prn_exact = prn(target, orientation=direct)[0]
        lo, hi = cert.prn_bounds
        if not lo <= cert.prn_exact <= hi:
            raise VerificationError(f"exact prn {cert.prn_exact} is outside [{lo}, {hi}]")
    return cert

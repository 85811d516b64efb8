"""Transitive orientations, posets, realizers and permutation-representation numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InputError, NotComparabilityError, VerificationError
from .graph import Graph, add_pendant, fresh_label, induced_subgraph
from .words import Word, represents

ORIENTATION_MAX_VERTICES = 20
DIMENSION_MAX_ELEMENTS = 14

Arc = tuple


class Orientation:
    """A set of arcs ``(a, b)`` meaning ``a -> b``."""

    __slots__ = ("arcs", "_out")

    def __init__(self, arcs: Iterable[Arc]):
        self.arcs = frozenset((str(a), str(b)) for a, b in arcs)
        self._out: dict[str, set[str]] = {}
        for a, b in self.arcs:
            self._out.setdefault(a, set()).add(b)

    def __eq__(self, other):
        return isinstance(other, Orientation) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def __repr__(self):
        return f"Orientation({sorted(self.arcs)})"

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self.arcs

    def successors(self, v: str) -> set[str]:
        return self._out.get(v, set())

    def reversed(self) -> "Orientation":
        return Orientation((b, a) for a, b in self.arcs)

    def restrict(self, vertices: Iterable[str]) -> "Orientation":
        keep = set(vertices)
        return Orientation((a, b) for a, b in self.arcs if a in keep and b in keep)

    def is_source(self, v: str) -> bool:
        return all(b != v for _, b in self.arcs)

    def is_sink(self, v: str) -> bool:
        return v not in self._out or not self._out[v]

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def to_dot(self, name: str = "T", vertices: Iterable[str] = ()) -> str:
        lines = [f"digraph {name} {{"]
        lines += [f'  "{v}";' for v in sorted(vertices)]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.sorted_arcs()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def orientation_violation(g: Graph, t: Orientation) -> tuple | None:
    """First reason `t` is not a transitive orientation of `g`, or None.

    Checks coverage of every edge exactly once, then every triple.
    """
    for a, b in t.arcs:
        if not g.has_edge(a, b):
            return ("not-an-edge", a, b)
        if (b, a) in t.arcs:
            return ("both-directions", a, b)
    for a, b in g.edges:
        if (a, b) not in t.arcs and (b, a) not in t.arcs:
            return ("unoriented", a, b)
    for a in g.vertices:
        for b in t.successors(a):
            for c in t.successors(b):
                if (a, c) not in t.arcs:
                    return ("intransitive", a, b, c)
    return None


def is_transitive_orientation(g: Graph, t: Orientation) -> bool:
    return orientation_violation(g, t) is None


class _Orienter:
    """Backtracking search with forcing.

    Two rules are propagated from every new arc a->b: for a wedge a-b-c with
    a, c non-adjacent both arcs point into b or both out of b, and closing a
    path x->a->b or a->b->y forces the shortcut arc.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.vs = g.vertices
        self.idx = {v: i for i, v in enumerate(self.vs)}
        self.nbr = [set(self.idx[b] for b in g.neighbors(v)) for v in self.vs]
        self.edges = [(self.idx[a], self.idx[b]) for a, b in g.edges]

    def propagate(self, out, inn, queue) -> bool:
        nbr = self.nbr
        while queue:
            a, b = queue.pop()
            if b in out[a]:
                continue
            if a in out[b]:
                return False
            out[a].add(b)
            inn[b].add(a)
            na, nb = nbr[a], nbr[b]
            for c in nb:
                if c != a and c not in na:
                    queue.append((c, b))
            for c in na:
                if c != b and c not in nb:
                    queue.append((a, c))
            for c in out[b]:
                if c not in na:
                    return False
                queue.append((a, c))
            for c in inn[a]:
                if c not in nb:
                    return False
                queue.append((c, b))
        return True

    def solve(self, forced: Sequence[tuple[int, int]] = ()):
        n = len(self.vs)
        out = [set() for _ in range(n)]
        inn = [set() for _ in range(n)]
        if not self.propagate(out, inn, list(forced)):
            return None
        return self._search(out, inn)

    def _search(self, out, inn):
        for a, b in self.edges:
            if b in out[a] or a in out[b]:
                continue
            for arc in ((a, b), (b, a)):
                o2 = [set(s) for s in out]
                i2 = [set(s) for s in inn]
                if self.propagate(o2, i2, [arc]):
                    res = self._search(o2, i2)
                    if res is not None:
                        return res
            return None
        return out


def transitive_orientation(
    g: Graph, forced: Iterable[Arc] = (), max_vertices: int = ORIENTATION_MAX_VERTICES
) -> Orientation | None:
    """A verified transitive orientation of `g` containing `forced`, or None."""
    if len(g) > max_vertices:
        raise BudgetExceeded(f"orientation search capped at {max_vertices} vertices")
    solver = _Orienter(g)
    forced_idx = []
    for a, b in forced:
        if not g.has_edge(a, b):
            raise InputError(f"forced arc {a}->{b} is not an edge")
        forced_idx.append((solver.idx[a], solver.idx[b]))
    out = solver.solve(forced_idx)
    if out is None:
        return None
    vs = g.vertices
    t = Orientation((vs[a], vs[b]) for a in range(len(vs)) for b in out[a])
    bad = orientation_violation(g, t)
    if bad is not None:
        raise VerificationError(f"orientation search produced an invalid orientation: {bad}")
    return t


def is_comparability(g: Graph) -> bool:
    return transitive_orientation(g) is not None


def enumerate_transitive_orientations(g: Graph) -> Iterator[Orientation]:
    """Every transitive orientation, by plain edge-by-edge branching.

    Used as an oracle; it shares nothing with the forcing search above.
    """
    edges = list(g.edges)
    arcs: set[Arc] = set()

    def consistent(a: str, b: str) -> bool:
        for c in g.vertices:
            if (b, c) in arcs:
                if not g.has_edge(a, c) or (c, a) in arcs:
                    return False
            if (c, a) in arcs:
                if not g.has_edge(c, b) or (b, c) in arcs:
                    return False
        return True

    def rec(i: int):
        if i == len(edges):
            t = Orientation(arcs)
            if is_transitive_orientation(g, t):
                yield t
            return
        a, b = edges[i]
        for x, y in ((a, b), (b, a)):
            if consistent(x, y):
                arcs.add((x, y))
                yield from rec(i + 1)
                arcs.discard((x, y))

    yield from rec(0)


class Poset:
    """A finite strict partial order given by its ``less`` pairs."""

    def __init__(self, elements: Iterable[str], less: Iterable[tuple[str, str]]):
        self.elements = tuple(sorted(set(elements)))
        self.less = frozenset(less)
        self._idx = {v: i for i, v in enumerate(self.elements)}
        for a, b in self.less:
            if a not in self._idx or b not in self._idx:
                raise InputError(f"relation {a}<{b} uses an unknown element")
            if a == b:
                raise InputError(f"relation is not irreflexive at {a!r}")
            if (b, a) in self.less:
                raise InputError(f"relation is not antisymmetric at {a!r}, {b!r}")
        for a, b in self.less:
            for c in self.elements:
                if (b, c) in self.less and (a, c) not in self.less:
                    raise InputError(f"relation is not transitive: {a}<{b}<{c}")

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self.less == other.less
        )

    def __repr__(self):
        return f"Poset({list(self.elements)}, {sorted(self.less)})"

    def lt(self, a: str, b: str) -> bool:
        return (a, b) in self.less

    def comparable(self, a: str, b: str) -> bool:
        return (a, b) in self.less or (b, a) in self.less

    def up(self, a: str) -> frozenset[str]:
        return frozenset(y for x, y in self.less if x == a)

    def down(self, a: str) -> frozenset[str]:
        return frozenset(x for x, y in self.less if y == a)

    def is_minimal(self, a: str) -> bool:
        return not self.down(a)

    def is_maximal(self, a: str) -> bool:
        return not self.up(a)

    def restrict(self, subset: Iterable[str]) -> "Poset":
        keep = set(subset)
        return Poset(keep, ((a, b) for a, b in self.less if a in keep and b in keep))

    def incomparable_pairs(self) -> list[tuple[str, str]]:
        els = self.elements
        return [
            (a, b)
            for i, a in enumerate(els)
            for b in els[i + 1:]
            if not self.comparable(a, b)
        ]

    def critical_pairs(self) -> list[tuple[str, str]]:
        """Ordered incomparable pairs (a, b) with D(a) ⊆ D(b) and U(b) ⊆ U(a)."""
        crit = []
        for a in self.elements:
            da, ua = self.down(a), self.up(a)
            for b in self.elements:
                if a == b or self.comparable(a, b):
                    continue
                if da <= self.down(b) and self.up(b) <= ua:
                    crit.append((a, b))
        return crit

    def comparability_graph(self) -> Graph:
        return Graph(self.elements, self.less)


def poset_from_orientation(g: Graph, t: Orientation) -> Poset:
    bad = orientation_violation(g, t)
    if bad is not None:
        raise InputError(f"orientation is not transitive: {bad}")
    return Poset(g.vertices, t.arcs)


@dataclass(frozen=True)
class Realizer:
    """Linear orders listed bottom to top."""

    orders: tuple[tuple[str, ...], ...]

    def __len__(self):
        return len(self.orders)

    def padded(self, k: int) -> "Realizer":
        if k < len(self.orders):
            raise InputError(f"cannot pad a realizer of size {len(self)} down to {k}")
        return Realizer(self.orders + (self.orders[-1],) * (k - len(self.orders)))

    def word(self) -> Word:
        return tuple(x for order in self.orders for x in order)

    def violation(self, p: Poset) -> tuple | None:
        """Why this is not a realizer of `p`, or None."""
        target = set(p.elements)
        for i, order in enumerate(self.orders):
            if len(order) != len(target) or set(order) != target:
                return ("not-a-linear-order", i)
        pos = [{x: j for j, x in enumerate(order)} for order in self.orders]
        for a in p.elements:
            for b in p.elements:
                if a == b:
                    continue
                below_everywhere = all(q[a] < q[b] for q in pos)
                if below_everywhere != p.lt(a, b):
                    return ("intersection-mismatch", a, b)
        return None

    def realizes(self, p: Poset) -> bool:
        return self.violation(p) is None

    def to_list(self) -> list[list[str]]:
        return [list(o) for o in self.orders]


def _linear_extension(elements: Sequence[str], above: list[int]) -> tuple[str, ...]:
    """Smallest-label-first topological sort of a relation given as up-masks."""
    n = len(elements)
    below = [0] * n
    for x in range(n):
        m = above[x]
        y = 0
        while m:
            if m & 1:
                below[y] |= 1 << x
            m >>= 1
            y += 1
    placed = 0
    out = []
    for _ in range(n):
        for x in range(n):
            if not placed >> x & 1 and below[x] & ~placed == 0:
                placed |= 1 << x
                out.append(elements[x])
                break
        else:
            raise VerificationError("relation has a cycle")
    return tuple(out)


def _reversal_colouring(p: Poset, k: int) -> list[list[int]] | None:
    """Colour critical pairs with k colours so each class is reversible.

    Returns the up-mask closure per colour, or None if impossible.
    """
    els = p.elements
    idx = {v: i for i, v in enumerate(els)}
    n = len(els)
    base = [0] * n
    for a, b in p.less:
        base[idx[a]] |= 1 << idx[b]
    pairs = [(idx[a], idx[b]) for a, b in p.critical_pairs()]

    def add(above: list[int], a: int, b: int) -> list[int] | None:
        # put b below a
        if above[a] >> b & 1:
            return None
        new = above[:]
        gain = (1 << a) | above[a]
        for u in range(n):
            if u == b or above[u] >> b & 1:
                new[u] |= gain
        return new

    def rec(i: int, classes: list[list[int]]) -> list[list[int]] | None:
        if i == len(pairs):
            return classes
        a, b = pairs[i]
        for c, above in enumerate(classes):
            if above[b] >> a & 1:
                # already reversed in this class
                return rec(i + 1, classes)
        for c in range(len(classes)):
            new = add(classes[c], a, b)
            if new is not None:
                res = rec(i + 1, classes[:c] + [new] + classes[c + 1:])
                if res is not None:
                    return res
        if len(classes) < k:
            new = add(base, a, b)
            if new is not None:
                res = rec(i + 1, classes + [new])
                if res is not None:
                    return res
        return None

    return rec(0, [])


def dimension(
    p: Poset, k_max: int | None = None, max_elements: int = DIMENSION_MAX_ELEMENTS
) -> tuple[int, Realizer]:
    """Least realizer size, with a verified realizer of that size."""
    if len(p) > max_elements:
        raise BudgetExceeded(f"dimension search capped at {max_elements} elements")
    if len(p) == 0:
        return 1, Realizer(((),))
    els = p.elements
    idx = {v: i for i, v in enumerate(els)}
    base = [0] * len(els)
    for a, b in p.less:
        base[idx[a]] |= 1 << idx[b]
    limit = k_max if k_max is not None else max(1, len(p))
    for k in range(1, limit + 1):
        if k == 1:
            if p.incomparable_pairs():
                continue
            realizer = Realizer((_linear_extension(els, base),))
        else:
            classes = _reversal_colouring(p, k)
            if classes is None:
                continue
            orders = [_linear_extension(els, above) for above in classes]
            realizer = Realizer(tuple(orders)).padded(k)
        bad = realizer.violation(p)
        if bad is not None:
            raise VerificationError(f"dimension search produced a bad realizer: {bad}")
        return k, realizer
    raise BudgetExceeded(f"dimension unknown above k_max={k_max}")


def require_comparability(g: Graph) -> Orientation:
    t = transitive_orientation(g)
    if t is None:
        raise NotComparabilityError("graph is not a comparability graph")
    return t


def induced_poset(g: Graph, t: Orientation | None = None) -> Poset:
    return poset_from_orientation(g, t if t is not None else require_comparability(g))


def prn(g: Graph, k_max: int | None = None, orientation: Orientation | None = None):
    """Permutation-representation number with its witness word and realizer.

    Returns ``(k, word, realizer)`` where ``word`` concatenates the realizer's
    linear orders and is checked to represent `g`.
    """
    p = induced_poset(g, orientation)
    k, realizer = dimension(p, k_max)
    w = realizer.word()
    if len(g) and not represents(w, g):
        raise VerificationError("realizer word does not represent the graph")
    return k, w, realizer


def source_orientation(g: Graph, v: str) -> Orientation | None:
    """A transitive orientation of `g` in which `v` is a source, if one exists.

    Found through the pendant graph: a transitive orientation of the graph
    with a new leaf on `v` makes `v` a source or a sink.
    """
    h = add_pendant(g, v)
    leaf = fresh_label(v, g)
    th = transitive_orientation(h)
    if th is None:
        return None
    t = th.restrict(g.vertices)
    if (leaf, v) in th:
        t = t.reversed()
    if not t.is_source(v):
        raise VerificationError(f"pendant orientation does not make {v!r} a source")
    return t


def sink_orientation(g: Graph, v: str) -> Orientation | None:
    t = source_orientation(g, v)
    return None if t is None else t.reversed()


def is_source_feasible(g: Graph, v: str) -> bool:
    """Whether some transitive orientation of `g` makes `v` a source (or, dually, a sink)."""
    g.neighbors(v)
    require_comparability(g)
    return transitive_orientation(add_pendant(g, v)) is not None


is_sink_feasible = is_source_feasible


def source_feasible_by_enumeration(g: Graph, v: str) -> bool:
    return any(t.is_source(v) for t in enumerate_transitive_orientations(g))


def is_all_adjacent(g: Graph, v: str) -> bool:
    return g.degree(v) == len(g) - 1


def extend_realizer(
    realizer: Realizer, p: Poset, m: str, role: str = "source"
) -> Realizer:
    """Extend a realizer of ``p`` minus `m` to one of `p`, adding one order.

    With `m` minimal the first orders put `m` at the bottom and the extra
    order is the last one with `m` inserted just below its up-set; the sink
    role is the order dual.
    """
    rest = [x for x in p.elements if x != m]
    sub = p.restrict(rest)
    bad = realizer.violation(sub)
    if bad is not None:
        raise InputError(f"input is not a realizer of the subposet: {bad}")
    if role == "source":
        if not p.is_minimal(m):
            raise InputError(f"{m!r} is not minimal")
        up = p.up(m)
        orders = [(m,) + order for order in realizer.orders]
        last = realizer.orders[-1]
        orders.append(
            tuple(x for x in last if x not in up) + (m,) + tuple(x for x in last if x in up)
        )
    elif role == "sink":
        if not p.is_maximal(m):
            raise InputError(f"{m!r} is not maximal")
        down = p.down(m)
        orders = [order + (m,) for order in realizer.orders]
        last = realizer.orders[-1]
        orders.append(
            tuple(x for x in last if x in down) + (m,) + tuple(x for x in last if x not in down)
        )
    else:
        raise InputError(f"unknown role {role!r}")
    out = Realizer(tuple(orders))
    bad = out.violation(p)
    if bad is not None:
        raise VerificationError(f"extended realizer fails: {bad}")
    return out


@dataclass(frozen=True)
class Irreducibility:
    prn: int
    witness: str | None = None

    @property
    def irreducible(self) -> bool:
        return self.witness is None and self.prn >= 2


def is_prn_irreducible(g: Graph) -> Irreducibility:
    """Check whether deleting any vertex lowers the prn by one.

    ``witness`` names a vertex whose deletion keeps the prn, when there is one.
    """
    k, _, _ = prn(g)
    if k < 2:
        return Irreducibility(k, g.vertices[0] if len(g) else None)
    for v in g.vertices:
        kv, _, _ = prn(g.remove_vertex(v))
        if kv != k - 1:
            return Irreducibility(k, v)
    return Irreducibility(k)


def dimension_by_enumeration(p: Poset, k_max: int) -> int | None:
    """Brute-force dimension over all linear extensions; tiny posets only."""
    els = p.elements
    exts = [
        perm
        for perm in permutations(els)
        if all(perm.index(a) < perm.index(b) for a, b in p.less)
    ]
    pos = [{x: i for i, x in enumerate(e)} for e in exts]
    incomparable = [(a, b) for a in els for b in els if a != b and not p.comparable(a, b)]
    if not incomparable:
        return 1
    # extension j reverses ordered pair (a, b) when b comes before a
    covers = [
        frozenset(i for i, (a, b) in enumerate(incomparable) if q[b] < q[a]) for q in pos
    ]
    target = frozenset(range(len(incomparable)))

    def rec(k: int, start: int, got: frozenset) -> bool:
        if got == target:
            return True
        if k == 0:
            return False
        return any(rec(k - 1, j + 1, got | covers[j]) for j in range(start, len(covers)))

    for k in range(2, k_max + 1):
        if rec(k, 0, frozenset()):
            return k
    return None

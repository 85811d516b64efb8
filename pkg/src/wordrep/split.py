"""Splits, split decomposition and recomposition, and parity graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DisconnectedGraphError, InputError, VerificationError
from .graph import Graph, MarkedGraph, check_disjoint, graph_from_dict, induced_subgraph
from .words import REPNUM_MAX_VERTICES, representation_number

SPLIT_MAX_VERTICES = 16


@dataclass(frozen=True)
class Split:
    side1: frozenset[str]
    side2: frozenset[str]

    def boundary(self, g: Graph) -> tuple[frozenset[str], frozenset[str]]:
        """Return (N(side1), N(side2)); N(side1) lies in side2 and vice versa."""
        n1 = frozenset(b for a in self.side1 for b in g.neighbors(a) if b in self.side2)
        n2 = frozenset(b for a in self.side2 for b in g.neighbors(a) if b in self.side1)
        return n1, n2


def split_violation(g: Graph, s: Split) -> str | None:
    if s.side1 & s.side2:
        return "sides overlap"
    if s.side1 | s.side2 != frozenset(g.vertices):
        return "sides do not cover the vertex set"
    if len(s.side1) < 2 or len(s.side2) < 2:
        return "each side needs at least two vertices"
    n1, n2 = s.boundary(g)
    for x in sorted(n1):
        for y in sorted(n2):
            if not g.has_edge(x, y):
                return f"boundary vertices {x} and {y} are not adjacent"
    return None


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; only connected graphs are classified")


def iter_splits(g: Graph) -> Iterator[Split]:
    """All splits, each once, side1 containing the least vertex."""
    _require_connected(g)
    n = len(g)
    if n > SPLIT_MAX_VERTICES:
        raise InputError(f"split search is capped at {SPLIT_MAX_VERTICES} vertices")
    if n < 4:
        return
    vs = g.vertices
    first, rest = vs[0], vs[1:]
    everything = frozenset(vs)
    for size in range(1, n - 2):
        for extra in combinations(rest, size):
            side1 = frozenset((first,) + extra)
            s = Split(side1, everything - side1)
            if split_violation(g, s) is None:
                yield s


def find_split(g: Graph) -> Split | None:
    """First split in enumeration order, or None if the graph is prime."""
    return next(iter_splits(g), None)


def is_prime(g: Graph) -> bool:
    return find_split(g) is None


def _marker_labels(taken, serial: int) -> tuple[str, str]:
    i = serial
    while True:
        a, b = f"~{i}", f"~{i}′"
        if a not in taken and b not in taken:
            return a, b
        i += 1


def split_once(
    g: Graph, s: Split, markers: tuple[str, str] | None = None
) -> tuple[MarkedGraph, MarkedGraph]:
    """The two split components, each with a fresh marker vertex."""
    bad = split_violation(g, s)
    if bad is not None:
        raise InputError(f"invalid split: {bad}")
    m1, m2 = markers if markers is not None else _marker_labels(g, 1)
    if m1 in g or m2 in g or m1 == m2:
        raise InputError("marker labels must be fresh and distinct")
    n1, n2 = s.boundary(g)
    g1 = induced_subgraph(g, s.side1)
    g2 = induced_subgraph(g, s.side2)
    c1 = Graph(g1.vertices + (m1,), g1.edges + tuple((m1, x) for x in sorted(n2)))
    c2 = Graph(g2.vertices + (m2,), g2.edges + tuple((m2, x) for x in sorted(n1)))
    return MarkedGraph(c1, m1), MarkedGraph(c2, m2)


def recompose(gm: MarkedGraph, hm: MarkedGraph) -> Graph:
    """Glue two marked graphs: join the markers' neighbourhoods, drop the markers."""
    check_disjoint(gm.graph, hm.graph)
    g, h = gm.graph, hm.graph
    keep_g = [v for v in g.vertices if v != gm.marked]
    keep_h = [v for v in h.vertices if v != hm.marked]
    edges = [e for e in g.edges if gm.marked not in e]
    edges += [e for e in h.edges if hm.marked not in e]
    edges += [(a, b) for a in sorted(gm.marker_neighbors) for b in sorted(hm.marker_neighbors)]
    return Graph(keep_g + keep_h, edges)


def star_center(g: Graph) -> str | None:
    """Centre of a star K_{1,t} with t >= 2, else None."""
    n = len(g)
    if n < 3 or len(g.edges) != n - 1:
        return None
    centres = [v for v in g.vertices if g.degree(v) == n - 1]
    return centres[0] if len(centres) == 1 else None


def classify_component(g: Graph) -> str:
    if g.is_complete():
        return "clique"
    if star_center(g) is not None:
        return "star"
    if len(g) >= 4 and is_prime(g):
        return "prime"
    return "other"


@dataclass(frozen=True)
class Component:
    graph: Graph
    tag: str
    markers: tuple[str, ...] = ()


@dataclass(frozen=True)
class SplitTree:
    """Split components plus the marker pairs that link them.

    The links form a tree on the components; recomposing along every link
    gives back the decomposed graph.
    """

    components: tuple[Component, ...]
    links: tuple[tuple[str, str], ...]

    def component_of(self, marker: str) -> int:
        for i, c in enumerate(self.components):
            if marker in c.markers:
                return i
        raise InputError(f"no component carries marker {marker!r}")

    def recompose(self) -> Graph:
        pieces = [(c.graph, set(c.markers)) for c in self.components]
        owner = {m: i for i, c in enumerate(self.components) for m in c.markers}
        for x, y in self.links:
            i, j = owner[x], owner[y]
            if i == j:
                raise InputError(f"link {x}-{y} joins a component to itself")
            gi, mi = pieces[i]
            gj, mj = pieces[j]
            merged = recompose(MarkedGraph(gi, x), MarkedGraph(gj, y))
            markers = (mi | mj) - {x, y}
            pieces[i] = (merged, markers)
            pieces[j] = None
            for m in markers:
                owner[m] = i
        live = [p for p in pieces if p is not None]
        if len(live) != 1:
            raise InputError("split tree links do not connect all components")
        return live[0][0]

    def to_dict(self) -> dict:
        """Nested form rooted at the first component."""
        if not self.components:
            return {}
        partner = {}
        for x, y in self.links:
            partner[x] = y
            partner[y] = x

        def node(i: int, via: str | None) -> dict:
            c = self.components[i]
            children = []
            for m in c.markers:
                if m == via:
                    continue
                other = partner[m]
                children.append(
                    {"marker": m, "partner": other, "node": node(self.component_of(other), other)}
                )
            d = {"tag": c.tag, "graph": c.graph.to_dict(), "markers": list(c.markers)}
            if c.tag != "clique":
                d["bipartite"] = c.graph.is_bipartite()
            d["children"] = children
            return d

        return node(0, None)

    @classmethod
    def from_dict(cls, data: Mapping) -> "SplitTree":
        comps: list[Component] = []
        links: list[tuple[str, str]] = []

        def walk(d: Mapping) -> None:
            if "graph" not in d:
                raise InputError("split tree node lacks a 'graph' field")
            g = graph_from_dict(d["graph"])
            if isinstance(g, MarkedGraph):
                g = g.graph
            markers = tuple(str(m) for m in d.get("markers", ()))
            for m in markers:
                if m not in g:
                    raise InputError(f"marker {m!r} is not a vertex of its component")
            comps.append(Component(g, str(d.get("tag", classify_component(g))), markers))
            for child in d.get("children", ()):
                links.append((str(child["marker"]), str(child["partner"])))
                walk(child["node"])

        walk(data)
        return cls(tuple(comps), tuple(links))


def split_decomposition(
    g: Graph, choose: Callable[[Graph, list[Split]], Split] | None = None
) -> SplitTree:
    """Split until every component is a clique, a star, or prime.

    `choose` picks among all splits of a component (default: the first);
    this gives any decomposition down to degenerate or prime pieces.
    """
    _require_connected(g)
    taken = set(g.vertices)
    serial = 1
    todo = [Component(g, classify_component(g))]
    done: list[Component] = []
    links: list[tuple[str, str]] = []
    while todo:
        c = todo.pop(0)
        if c.tag in ("clique", "star", "prime"):
            done.append(c)
            continue
        if choose is None:
            s = find_split(c.graph)
        else:
            s = choose(c.graph, list(iter_splits(c.graph)))
        a, b = _marker_labels(taken, serial)
        serial = int(a[1:]) + 1
        taken |= {a, b}
        c1, c2 = split_once(c.graph, s, (a, b))
        links.append((a, b))
        for part, new in ((c1, a), (c2, b)):
            markers = tuple(m for m in c.markers if m in part.graph) + (new,)
            todo.append(Component(part.graph, classify_component(part.graph), markers))
    return SplitTree(tuple(done), tuple(links))


def _mergeable(tree: SplitTree, x: str, y: str) -> bool:
    cx = tree.components[tree.component_of(x)]
    cy = tree.components[tree.component_of(y)]
    if cx.tag == "clique" and cy.tag == "clique":
        return True
    if cx.tag == "star" and cy.tag == "star":
        return (star_center(cx.graph) == x) != (star_center(cy.graph) == y)
    return False


def _merge(tree: SplitTree, x: str, y: str) -> SplitTree:
    i, j = tree.component_of(x), tree.component_of(y)
    ci, cj = tree.components[i], tree.components[j]
    g = recompose(MarkedGraph(ci.graph, x), MarkedGraph(cj.graph, y))
    markers = tuple(m for m in ci.markers + cj.markers if m not in (x, y))
    merged = Component(g, classify_component(g), markers)
    comps = [c for k, c in enumerate(tree.components) if k not in (i, j)]
    comps.insert(min(i, j), merged)
    links = tuple(l for l in tree.links if l != (x, y))
    return SplitTree(tuple(comps), links)


def minimal_split_decomposition(g: Graph) -> SplitTree:
    """The reduced decomposition: no clique-clique links and no star-star
    links joining a centre to a leaf."""
    tree = split_decomposition(g)
    changed = True
    while changed:
        changed = False
        for x, y in tree.links:
            if _mergeable(tree, x, y):
                tree = _merge(tree, x, y)
                changed = True
                break
    for c in tree.components:
        if c.tag not in ("clique", "star", "prime"):
            raise VerificationError(f"minimal decomposition left a {c.tag} component")
    if tree.recompose() != g:
        raise VerificationError("minimal decomposition does not recompose to the input")
    return tree


def representability_via_decomposition(
    g: Graph,
    k_max: int = 3,
    tree: SplitTree | None = None,
    cross_check: bool = True,
    max_vertices: int = REPNUM_MAX_VERTICES,
) -> tuple[int, list[int]]:
    """Representation number as the maximum over split components.

    Returns the value and the per-component numbers. When the whole graph is
    within the oracle's reach the direct search is run too and must agree.
    """
    if tree is None:
        tree = minimal_split_decomposition(g)
    parts = [representation_number(c.graph, k_max, max_vertices)[0] for c in tree.components]
    value = max(parts)
    if cross_check and len(g) <= max_vertices:
        direct, _ = representation_number(g, k_max, max_vertices)
        if direct != value:
            raise VerificationError(
                f"decomposition gives R={value} but direct search gives R={direct}"
            )
    return value, parts


def induced_path_parities(g: Graph) -> dict[tuple[str, str], set[int]]:
    """Parities of the lengths of all induced paths between each vertex pair."""
    out: dict[tuple[str, str], set[int]] = {}
    for u in g.vertices:
        path = [u]
        on_path = {u}

        def extend():
            last = path[-1]
            for w in g.neighbors(last):
                if w in on_path:
                    continue
                # no chords back to earlier path vertices
                if any(g.has_edge(w, p) for p in path[:-1]):
                    continue
                if u < w:
                    out.setdefault((u, w), set()).add(len(path) % 2)
                path.append(w)
                on_path.add(w)
                extend()
                path.pop()
                on_path.discard(w)

        extend()
    return out


def is_parity_by_paths(g: Graph) -> bool:
    return all(len(p) == 1 for p in induced_path_parities(g).values())


def is_parity(g: Graph, cross_check: bool = True) -> bool:
    """Every minimal split component is a clique or bipartite."""
    tree = minimal_split_decomposition(g)
    verdict = all(c.tag == "clique" or c.graph.is_bipartite() for c in tree.components)
    if cross_check and len(g) <= 8 and verdict != is_parity_by_paths(g):
        raise VerificationError("split-based parity test disagrees with the induced-path test")
    return verdict

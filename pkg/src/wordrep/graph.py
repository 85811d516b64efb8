"""Simple undirected graphs over string labels.

Graphs are immutable values; every iteration order is the sorted label
order so that searches and serialized output are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BudgetExceeded, InputError

PRIME = "′"
ISOMORPHISM_LIMIT = 12


class Graph:
    """A labeled simple graph.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> g.edges
    (('a', 'b'), ('b', 'c'))
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        verts = {str(v) for v in vertices}
        adj: dict[str, set[str]] = {v: set() for v in verts}
        for edge in edges:
            a, b = (str(x) for x in edge)
            if a == b:
                raise InputError(f"self-loop on vertex {a!r}")
            for x in (a, b):
                if x not in adj:
                    raise InputError(f"edge {a}-{b} uses unknown vertex {x!r}")
            adj[a].add(b)
            adj[b].add(a)
        self._vertices = tuple(sorted(verts))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._edges = tuple(
            sorted((a, b) for a in self._vertices for b in self._adj[a] if a < b)
        )
        self._hash = None

    @classmethod
    def from_adjacency(cls, adjacency: Mapping[str, Iterable[str]]) -> "Graph":
        return cls(adjacency, [(a, b) for a, nbrs in adjacency.items() for b in nbrs])

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        edges = " ".join(f"{a}-{b}" for a, b in self._edges)
        return f"Graph(V={list(self._vertices)}, E=[{edges}])"

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(self._adj[v]) for v in self._vertices))

    def non_edges(self) -> list[tuple[str, str]]:
        vs = self._vertices
        return [
            (a, b)
            for i, a in enumerate(vs)
            for b in vs[i + 1:]
            if b not in self._adj[a]
        ]

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return len(self._edges) == n * (n - 1) // 2

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for b in self._adj[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(self._vertices)

    def bipartition(self) -> tuple[frozenset[str], frozenset[str]] | None:
        """Two-colouring with the smallest label of each component on side A."""
        side: dict[str, int] = {}
        for start in self._vertices:
            if start in side:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                a = stack.pop()
                for b in self._adj[a]:
                    if b not in side:
                        side[b] = 1 - side[a]
                        stack.append(b)
                    elif side[b] == side[a]:
                        return None
        a_side = frozenset(v for v, s in side.items() if s == 0)
        return a_side, frozenset(self._vertices) - a_side

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def remove_vertex(self, v: str) -> "Graph":
        self.neighbors(v)
        return induced_subgraph(self, [u for u in self._vertices if u != v])

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        new = [mapping.get(v, v) for v in self._vertices]
        if len(set(new)) != len(new):
            raise InputError("relabeling is not injective")
        return Graph(new, [(mapping.get(a, a), mapping.get(b, b)) for a, b in self._edges])

    def index_adjacency(self) -> list[int]:
        """Adjacency bitmasks indexed by sorted vertex position."""
        pos = {v: i for i, v in enumerate(self._vertices)}
        masks = []
        for v in self._vertices:
            m = 0
            for b in self._adj[v]:
                m |= 1 << pos[b]
            masks.append(m)
        return masks

    def to_dict(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self._edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self._vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in self._edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MarkedGraph:
    """A graph with one distinguished vertex used as a recomposition marker."""

    graph: Graph
    marked: str

    def __post_init__(self):
        if self.marked not in self.graph:
            raise InputError(f"marked vertex {self.marked!r} is not in the graph")
        if not self.graph.neighbors(self.marked):
            raise InputError(f"marked vertex {self.marked!r} has no neighbours")

    @property
    def rest(self) -> tuple[str, ...]:
        """Vertices other than the marker."""
        return tuple(v for v in self.graph.vertices if v != self.marked)

    @property
    def marker_neighbors(self) -> frozenset[str]:
        return self.graph.neighbors(self.marked)

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        d["marked"] = self.marked
        return d


def graph_from_dict(data: Mapping) -> Graph | MarkedGraph:
    """Parse the JSON graph schema; returns a MarkedGraph if ``marked`` is set."""
    if not isinstance(data, Mapping):
        raise InputError("graph JSON must be an object")
    if "vertices" not in data:
        raise InputError("graph JSON is missing field 'vertices'")
    vertices = data["vertices"]
    edges = data.get("edges", [])
    if not isinstance(vertices, list):
        raise InputError("field 'vertices' must be a list")
    if len(set(map(str, vertices))) != len(vertices):
        raise InputError("field 'vertices' contains duplicate labels")
    for i, e in enumerate(edges):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise InputError(f"field 'edges'[{i}] must be a pair of labels")
    g = Graph(vertices, edges)
    if data.get("marked") is not None:
        return MarkedGraph(g, str(data["marked"]))
    return g


def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    keep = set(subset)
    for v in sorted(keep):
        if v not in g:
            raise InputError(f"vertex {v!r} is not in the graph")
    return Graph(keep, [(a, b) for a, b in g.edges if a in keep and b in keep])


def fresh_label(base: str, taken) -> str:
    label = base + PRIME
    i = 2
    while label in taken:
        label = f"{base}{PRIME}{i}"
        i += 1
    return label


def add_pendant(g: Graph, v: str) -> Graph:
    """Attach a new leaf, labeled ``fresh_label(v, g)``, adjacent only to `v`."""
    g.neighbors(v)
    leaf = fresh_label(v, g)
    return Graph(g.vertices + (leaf,), g.edges + ((v, leaf),))


def check_disjoint(g1: Graph, g2: Graph) -> None:
    clash = sorted(set(g1.vertices) & set(g2.vertices))
    if clash:
        raise InputError(f"vertex labels collide: {', '.join(clash)}")


def join_by_edge(gm: MarkedGraph, hm: MarkedGraph) -> Graph:
    """Disjoint union of two marked graphs plus the edge between the markers."""
    check_disjoint(gm.graph, hm.graph)
    return Graph(
        gm.graph.vertices + hm.graph.vertices,
        gm.graph.edges + hm.graph.edges + ((gm.marked, hm.marked),),
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    check_disjoint(g1, g2)
    return Graph(g1.vertices + g2.vertices, g1.edges + g2.edges)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    n2: int | None = None

    KINDS = ("complete", "path", "cycle", "complete-bipartite", "star", "crown", "edgeless")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InputError(f"unknown graph family {self.kind!r}")
        if self.n < 1 or (self.n2 is not None and self.n2 < 1):
            raise InputError("family size parameters must be positive")
        if self.kind == "crown" and self.n < 2:
            raise InputError("crown graphs need n >= 2")
        if self.kind == "cycle" and self.n < 3:
            raise InputError("cycles need n >= 3")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse shorthand like ``crown:3`` or ``complete-bipartite:2x3``."""
        kind, _, size = text.partition(":")
        try:
            if "x" in size:
                a, b = size.split("x")
                return cls(kind, int(a), int(b))
            return cls(kind, int(size))
        except ValueError:
            raise InputError(f"bad family size in {text!r}") from None


def generate_family(spec: FamilySpec) -> Graph:
    n = spec.n
    nums = [str(i) for i in range(1, n + 1)]
    if spec.kind == "complete":
        return Graph(nums, [(a, b) for i, a in enumerate(nums) for b in nums[i + 1:]])
    if spec.kind == "path":
        return Graph(nums, zip(nums, nums[1:]))
    if spec.kind == "cycle":
        return Graph(nums, list(zip(nums, nums[1:])) + [(nums[-1], nums[0])])
    if spec.kind == "edgeless":
        return Graph(nums)
    if spec.kind == "star":
        return Graph(["c"] + nums, [("c", x) for x in nums])
    if spec.kind == "complete-bipartite":
        n2 = spec.n2 if spec.n2 is not None else n
        a = [f"a{i}" for i in range(1, n + 1)]
        b = [f"b{j}" for j in range(1, n2 + 1)]
        return Graph(a + b, [(x, y) for x in a for y in b])
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]
    return Graph(a + b, [(a[i], b[j]) for i in range(n) for j in range(n) if i != j])


def family(text: str) -> Graph:
    return generate_family(FamilySpec.parse(text))


def isomorphism(g: Graph, h: Graph) -> dict[str, str] | None:
    """An edge-preserving bijection from `g` onto `h`, or None."""
    if max(len(g), len(h)) > ISOMORPHISM_LIMIT:
        raise BudgetExceeded("instance too large for exact isomorphism")
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    # most constrained vertices first
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if all(h.has_edge(w, mapping[u]) == g.has_edge(v, u) for u in order[:i]):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None

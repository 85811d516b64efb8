"""Words over vertex labels and the exhaustive representation-number search.

A word is a tuple of labels. Text form is whitespace separated, e.g.
``"b a m′ b m′ a"``.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError, VerificationError
from .graph import Graph

log = logging.getLogger(__name__)

Word = tuple

REPNUM_MAX_VERTICES = 8


def parse_word(text: str) -> Word:
    return tuple(text.split())


def format_word(w: Iterable[str]) -> str:
    return " ".join(w)


def alphabet(w: Sequence[str]) -> frozenset[str]:
    return frozenset(w)


def project(w: Sequence[str], letters: Iterable[str]) -> Word:
    keep = set(letters)
    return tuple(x for x in w if x in keep)


def uniformity(w: Sequence[str]) -> int | None:
    """The common letter multiplicity, or None if the word is not uniform."""
    counts = set(Counter(w).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def alternate(w: Sequence[str], a: str, b: str) -> bool:
    """True iff `a` and `b` both occur and strictly alternate in `w`."""
    if a == b:
        raise InputError("alternation needs two distinct letters")
    sub = project(w, (a, b))
    if a not in sub or b not in sub:
        return False
    return all(x != y for x, y in zip(sub, sub[1:]))


def alternation_graph(w: Sequence[str]) -> Graph:
    if not w:
        raise InputError("empty word")
    letters = sorted(alphabet(w))
    positions: dict[str, list[int]] = {x: [] for x in letters}
    for i, x in enumerate(w):
        positions[x].append(i)
    edges = []
    for a, b in combinations(letters, 2):
        tagged = sorted([(i, 0) for i in positions[a]] + [(i, 1) for i in positions[b]])
        if all(s != t for (_, s), (_, t) in zip(tagged, tagged[1:])):
            edges.append((a, b))
    return Graph(letters, edges)


def check_alphabet(w: Sequence[str], g: Graph) -> None:
    letters = alphabet(w)
    missing = sorted(set(g.vertices) - letters)
    extra = sorted(letters - set(g.vertices))
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing letters: " + ", ".join(missing))
        if extra:
            parts.append("extra letters: " + ", ".join(extra))
        raise InputError("word alphabet does not match graph (" + "; ".join(parts) + ")")


def represents(w: Sequence[str], g: Graph) -> bool:
    check_alphabet(w, g)
    return alternation_graph(w) == g


def is_permutation_word(w: Sequence[str], n_letters: int) -> int | None:
    """Number of blocks if `w` is a concatenation of permutations of its alphabet."""
    if n_letters == 0 or len(w) % n_letters:
        return None
    blocks = [w[i:i + n_letters] for i in range(0, len(w), n_letters)]
    if all(len(set(b)) == n_letters for b in blocks):
        return len(blocks)
    return None


def cyclic_shift_normalize(w: Sequence[str], m: str, mode: str = "suffix") -> Word:
    """Rotate a uniform word so that it ends with `m` (suffix) or starts with it (prefix)."""
    w = tuple(w)
    if m not in w:
        raise InputError(f"letter {m!r} does not occur in the word")
    if uniformity(w) is None:
        raise InputError("word is not uniform")
    if mode == "prefix":
        i = w.index(m)
        return w[i:] + w[:i]
    if mode == "suffix":
        i = w.index(m) + 1
        return w[i:] + w[:i]
    raise InputError(f"unknown normalization mode {mode!r}")


def initial_permutation(w: Sequence[str]) -> Word:
    seen: dict[str, None] = {}
    for x in w:
        seen.setdefault(x, None)
    return tuple(seen)


def pad_uniform(w: Sequence[str], g: Graph, t: int) -> Word:
    """Raise a k-uniform word representing `g` to a t-uniform one."""
    w = tuple(w)
    k = uniformity(w)
    if k is None:
        raise InputError("word is not uniform")
    if t < k:
        raise InputError(f"cannot pad a {k}-uniform word down to {t}")
    if not represents(w, g):
        raise InputError("word does not represent the graph")
    out = initial_permutation(w) * (t - k) + w
    if not represents(out, g):
        raise VerificationError("padded word no longer represents the graph")
    return out


class _UniformSearch:
    """Depth-first search for k-uniform words representing a graph.

    Letters are vertex indices. Edges are checked incrementally: a letter may
    only repeat once each neighbour has occurred since its previous
    occurrence. A non-adjacent pair is "broken" once one of them repeats
    without the other in between; a pair that can no longer break is pruned.
    Letters are tried in index order with the first letter fixed to 0, so
    the first hit is the lexicographically least representing word.
    """

    def __init__(self, adj: list[int], k: int, node_limit: int | None = None):
        self.n = len(adj)
        self.adj = adj
        self.k = k
        self.full = (1 << self.n) - 1
        self.node_limit = node_limit
        self.nodes = 0

    def run(self, prefix: Sequence[int] = (0,)) -> list[int] | None:
        n, k = self.n, self.k
        self.counts = [0] * n
        self.since = [0] * n
        self.broken = [0] * n
        self.word: list[int] = []
        undo = []
        for x in prefix:
            state = self._place(x)
            if state is None:
                return None
            undo.append(state)
        if self._dfs(n * k - len(prefix)):
            return list(self.word)
        return None

    def _place(self, x: int):
        counts, since, broken, adj = self.counts, self.since, self.broken, self.adj
        bit = 1 << x
        cx = counts[x]
        saved = (x, since[:], broken[:])
        if cx:
            if adj[x] & ~since[x]:
                return None
            missing = self.full & ~since[x] & ~adj[x] & ~bit
            if missing:
                broken[x] |= missing
                y = 0
                m = missing
                while m:
                    if m & 1:
                        broken[y] |= bit
                    m >>= 1
                    y += 1
        counts[x] = cx + 1
        for y in range(self.n):
            since[y] |= bit
        since[x] = 0
        if cx + 1 == self.k:
            # every still-unbroken non-neighbour must have at least two letters left
            open_pairs = self.full & ~adj[x] & ~bit & ~broken[x]
            y = 0
            while open_pairs:
                if open_pairs & 1 and self.k - counts[y] <= 1:
                    self._restore(saved, cx)
                    return None
                open_pairs >>= 1
                y += 1
        self.word.append(x)
        return saved

    def _restore(self, saved, cx):
        x, since, broken = saved
        self.counts[x] = cx
        self.since = since
        self.broken = broken

    def _unplace(self, saved):
        x = saved[0]
        self.word.pop()
        self._restore(saved, self.counts[x] - 1)

    def _dfs(self, remaining: int) -> bool:
        if remaining == 0:
            return True
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded("word search node budget exhausted")
        for x in range(self.n):
            if self.counts[x] == self.k:
                continue
            saved = self._place(x)
            if saved is None:
                continue
            if self._dfs(remaining - 1):
                return True
            self._unplace(saved)
        return False


def _search_branch(args):
    adj, k, prefix, node_limit = args
    return _UniformSearch(adj, k, node_limit).run(prefix)


def find_uniform_word(
    g: Graph, k: int, jobs: int = 1, node_limit: int | None = None
) -> Word | None:
    """Least k-uniform word representing `g`, or None if there is none."""
    if len(g) == 0:
        return ()
    adj = g.index_adjacency()
    if len(g) == 1:
        found = [0] * k
    elif jobs > 1:
        # partition on the second letter; take the least branch with a hit
        branches = [(adj, k, (0, x), node_limit) for x in range(len(g))]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_branch, branches))
        found = next((r for r in results if r is not None), None)
    else:
        found = _UniformSearch(adj, k, node_limit).run()
    if found is None:
        return None
    return tuple(g.vertices[i] for i in found)


def representation_number(
    g: Graph,
    k_max: int = 3,
    max_vertices: int = REPNUM_MAX_VERTICES,
    jobs: int = 1,
    node_limit: int | None = None,
) -> tuple[int, Word]:
    """Least k with a k-uniform representing word, and that word.

    Raises BudgetExceeded when no k <= k_max works ("unknown above k_max")
    or the graph exceeds `max_vertices`.
    """
    if len(g) > max_vertices:
        raise BudgetExceeded(
            f"graph has {len(g)} vertices; exhaustive search is capped at {max_vertices}"
        )
    for k in range(1, k_max + 1):
        w = find_uniform_word(g, k, jobs=jobs, node_limit=node_limit)
        log.debug("k=%d: %s", k, "found" if w is not None else "none")
        if w is not None:
            if not represents(w, g):
                raise VerificationError("search returned a non-representing word")
            return k, w
    raise BudgetExceeded(f"representation number unknown above k_max={k_max}")

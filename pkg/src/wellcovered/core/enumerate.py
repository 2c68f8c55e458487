"""Labeled-graph streams for theorem sweeps.

Exhaustive mode visits every labeled simple graph on ``n`` vertices whose
edge bitmask (bit ``i`` = ``i``-th pair in lexicographic order) passes the
filter, in ascending mask order.  Filters that forbid cycle lengths are
subgraph-closed, so their graphs are generated directly by pruned search
instead of testing all ``2^(n(n-1)/2)`` masks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from ..errors import BadParams, TooLarge
from .bits import iter_bits
from .graph import Graph
from .structure import has_cycle_of_length, is_bipartite

EXHAUSTIVE_MAX_N = 8

Predicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class NamedFilter:
    name: str
    predicate: Predicate
    forbidden_cycles: tuple[int, ...] | None = None  # set when the filter is subgraph-closed


def _no_cycles(lengths: tuple[int, ...]) -> Predicate:
    return lambda G: not any(has_cycle_of_length(G, k) for k in lengths)


def _unicyclic(G: Graph) -> bool:
    return G.n >= 3 and G.is_connected() and G.m == G.n


def _tree(G: Graph) -> bool:
    return G.n >= 1 and G.is_connected() and G.m == G.n - 1


def _konig(G: Graph) -> bool:
    from ..independence import core_numbers

    _, tau, nu = core_numbers(G)
    return tau == nu


FILTERS: dict[str, NamedFilter] = {
    f.name: f
    for f in (
        NamedFilter("all", lambda G: True, ()),
        NamedFilter("connected", Graph.is_connected),
        NamedFilter("no-3-5-cycles", _no_cycles((3, 5)), (3, 5)),
        NamedFilter("no-3-5-7-cycles", _no_cycles((3, 5, 7)), (3, 5, 7)),
        NamedFilter("bipartite", is_bipartite, (3, 5, 7, 9, 11, 13, 15)),
        NamedFilter("unicyclic", _unicyclic),
        NamedFilter("tree", _tree),
        NamedFilter("konig", _konig),
    )
}


def resolve_filter(filter: str | Predicate | None) -> NamedFilter:
    if filter is None:
        return FILTERS["all"]
    if isinstance(filter, str):
        try:
            return FILTERS[filter]
        except KeyError:
            raise BadParams(f"unknown filter {filter!r}; known: {', '.join(FILTERS)}") from None
    if isinstance(filter, NamedFilter):
        return filter
    return NamedFilter(getattr(filter, "__name__", "custom"), filter)


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs or edge_pairs(n)
    adj = [0] * n
    for i in iter_bits(mask):
        u, v = pairs[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj), tuple(range(n)))


def enumerate_labeled_graphs(
    n: int,
    filter: str | Predicate | None = None,
    *,
    samples: int | None = None,
    seed: int = 0,
    p: float = 0.5,
) -> Iterator[Graph]:
    """Stream labeled graphs on ``n`` vertices passing ``filter``.

    With ``samples`` unset the stream is exhaustive (``n <= 8``); otherwise it
    yields ``samples`` accepted graphs drawn with edge probability ``p`` from
    a generator seeded by ``seed``.
    """
    f = resolve_filter(filter)
    if n < 0:
        raise BadParams("negative vertex count")
    if samples is not None:
        yield from _sampled(n, f, samples, seed, p)
        return
    if n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N}; use sampled mode")
    if f.forbidden_cycles is not None:
        lengths = tuple(k for k in f.forbidden_cycles if k <= n)
        yield from _pruned(n, lengths, f.predicate)
        return
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        G = graph_from_mask(n, mask, pairs)
        if f.predicate(G):
            yield G


def _closes_cycle(adj: list[int], u: int, v: int, lengths: tuple[int, ...]) -> bool:
    """Would adding edge uv close a cycle whose length is in ``lengths``?"""
    if not lengths:
        return False
    targets = {k - 1 for k in lengths}  # path lengths from u to v
    longest = max(targets)

    def walk(x: int, used: int, depth: int) -> bool:
        # depth = edges on the path u..x; closing through x-v adds one more
        if depth + 1 in targets and adj[x] >> v & 1:
            return True
        if depth + 1 >= longest:
            return False
        for w in iter_bits(adj[x] & ~used):
            if walk(w, used | (1 << w), depth + 1):
                return True
        return False

    return walk(u, (1 << u) | (1 << v), 0)


def _pruned(n: int, lengths: tuple[int, ...], predicate: Predicate) -> Iterator[Graph]:
    pairs = edge_pairs(n)
    m = len(pairs)
    adj = [0] * n

    # decide bits from the most significant edge down, 0 before 1: ascending masks
    def rec(i: int, mask: int) -> Iterator[int]:
        if i < 0:
            yield mask
            return
        yield from rec(i - 1, mask)
        u, v = pairs[i]
        if _closes_cycle(adj, u, v, lengths):
            return
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        yield from rec(i - 1, mask | (1 << i))
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)

    for mask in rec(m - 1, 0):
        G = graph_from_mask(n, mask, pairs)
        if predicate(G):
            yield G


def _sampled(n: int, f: NamedFilter, samples: int, seed: int, p: float) -> Iterator[Graph]:
    rng = random.Random(seed)
    pairs = edge_pairs(n)
    accepted = attempts = 0
    limit = max(1000, 1000 * samples)
    while accepted < samples and attempts < limit:
        attempts += 1
        mask = 0
        for i in range(len(pairs)):
            if rng.random() < p:
                mask |= 1 << i
        G = graph_from_mask(n, mask, pairs)
        if f.predicate(G):
            accepted += 1
            yield G


# -- unicyclic structures ----------------------------------------------------

@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[tuple, ...]:
    """Unlabeled rooted trees on ``size`` vertices as canonical nested tuples."""
    if size == 1:
        return ((),)
    return tuple(sorted(_forests(size - 1, None)))


@lru_cache(maxsize=None)
def _forests(total: int, bound: tuple | None) -> tuple[tuple, ...]:
    # multisets of rooted trees of total size ``total``, children in nonincreasing order
    if total == 0:
        return ((),)
    out = []
    for s in range(1, total + 1):
        for t in rooted_trees(s):
            key = (s, t)
            if bound is not None and key > bound:
                continue
            for rest in _forests(total - s, key):
                out.append((t,) + rest)
    return tuple(out)


def _tree_size(t: tuple) -> int:
    return 1 + sum(_tree_size(c) for c in t)


def enumerate_unicyclic(max_n: int, cycle_lengths: range | tuple[int, ...] = range(3, 8)) -> Iterator[Graph]:
    """Connected unicyclic graphs: a cycle C_k with a rooted tree hung at each cycle vertex.

    Every unicyclic graph with ``n <= max_n`` and cycle length in
    ``cycle_lengths`` appears at least once (rotations and reflections are not
    removed).  Cycle vertices are ``0..k-1``.
    """
    for k in cycle_lengths:
        for n in range(k, max_n + 1):
            extra = n - k
            for sizes in _compositions(extra, k):
                choices = [rooted_trees(s + 1) for s in sizes]
                yield from _attach(k, choices)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _attach(k: int, choices: list[tuple[tuple, ...]]) -> Iterator[Graph]:
    def rec(i: int, picked: list[tuple]) -> Iterator[Graph]:
        if i == k:
            edges = [(j, (j + 1) % k) for j in range(k)]
            nxt = k
            for root, tree in enumerate(picked):
                stack = [(root, tree)]
                while stack:
                    v, t = stack.pop()
                    for child in t:
                        edges.append((v, nxt))
                        stack.append((nxt, child))
                        nxt += 1
            yield Graph.from_edges(nxt, edges)
            return
        for t in choices[i]:
            picked.append(t)
            yield from rec(i + 1, picked)
            picked.pop()

    yield from rec(0, [])

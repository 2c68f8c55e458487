"""Distance layers, blocks, girth and fixed-length cycle search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from ..errors import EmptySource, VertexOutOfRange
from .bits import VertexSet, iter_bits, lowest, to_list
from .graph import Graph

INF = math.inf
CYCLE_LENGTHS = (3, 4, 5, 7)


@dataclass(frozen=True)
class DistanceLayers:
    layers: list[VertexSet]
    unreachable: VertexSet

    def layer(self, i: int) -> VertexSet:
        return self.layers[i] if i < len(self.layers) else 0


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[VertexSet]
    cut_vertices: VertexSet

    def two_connected(self) -> list[VertexSet]:
        return [b for b in self.blocks if b.bit_count() >= 3]


def distance_layers(G: Graph, W: VertexSet) -> DistanceLayers:
    """BFS layering D_0(W) = W, D_i(W) = N(D_{i-1}) minus earlier layers."""
    if not W:
        raise EmptySource("distance layers need a nonempty source set")
    if W & ~G.vertices:
        raise VertexOutOfRange("source set not contained in V(G)")
    layers = [W]
    seen = W
    frontier = W
    while True:
        nxt = G.neighbors_of_set(frontier) & ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    return DistanceLayers(layers, G.vertices & ~seen)


def blocks(G: Graph) -> BlockDecomposition:
    """Biconnected components (isolated vertices form singleton blocks) and cut vertices."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    found: list[VertexSet] = []
    cut = 0
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not G.adj[root]:
            disc[root] = timer
            timer += 1
            found.append(1 << root)
            continue
        # iterative DFS with an explicit edge stack
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(to_list(G.adj[root])))]
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(to_list(G.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    if parent != root:
                        cut |= 1 << parent
                    comp = 0
                    while True:
                        a, b = edge_stack.pop()
                        comp |= (1 << a) | (1 << b)
                        if (a, b) == (parent, u):
                            break
                    found.append(comp)
        if root_children >= 2:
            cut |= 1 << root
    found.sort(key=to_list)
    return BlockDecomposition(found, cut)


def girth(G: Graph, within: VertexSet | None = None) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    mask = G.vertices if within is None else within
    best = INF
    adj = G.adj
    for root in iter_bits(mask):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u]
                if 2 * du + 1 >= best:
                    break
                for w in iter_bits(adj[u] & mask):
                    if w not in dist:
                        dist[w] = du + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, du + dist[w] + 1)
            frontier = nxt
    return best


def iter_cycles(G: Graph, k: int, within: VertexSet | None = None, induced: bool = False) -> Iterator[tuple[int, ...]]:
    """Every k-cycle once, as a tuple starting at its lowest vertex with ``c[1] < c[-1]``.

    Cycles are subgraph cycles unless ``induced`` is set, in which case chords
    disqualify a cycle.
    """
    mask = G.vertices if within is None else within
    adj = G.adj
    for s in iter_bits(mask):
        allowed = mask & ~((2 << s) - 1)
        path = [s]

        def extend(u: int, used: VertexSet) -> Iterator[tuple[int, ...]]:
            depth = len(path)
            if depth == k:
                if adj[u] >> s & 1 and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in iter_bits(adj[u] & allowed & ~used):
                if induced:
                    # w may touch only its predecessor, plus the start when it closes the cycle
                    touch = adj[w] & used & ~(1 << u)
                    if depth + 1 == k:
                        if touch != 1 << s:
                            continue
                    elif touch:
                        continue
                path.append(w)
                yield from extend(w, used | (1 << w))
                path.pop()

        yield from extend(s, 1 << s)


def has_cycle_of_length(G: Graph, k: int, within: VertexSet | None = None, induced: bool = False) -> bool:
    return next(iter_cycles(G, k, within, induced), None) is not None


def vertices_on_cycles(G: Graph, k: int, within: VertexSet | None = None) -> VertexSet:
    out = 0
    for c in iter_cycles(G, k, within):
        for v in c:
            out |= 1 << v
    return out


def girth_and_cycles(G: Graph, induced: bool = False) -> tuple[float, dict[int, bool]]:
    """Girth plus, for k in 3, 4, 5, 7, whether G contains a k-cycle.

    By default k-cycles are subgraph cycles; ``induced=True`` asks for
    chordless ones instead.
    """
    return girth(G), {k: has_cycle_of_length(G, k, induced=induced) for k in CYCLE_LENGTHS}


def is_bipartite(G: Graph, within: VertexSet | None = None) -> bool:
    mask = G.vertices if within is None else within
    side = {}
    for comp in G.components(mask):
        r = lowest(comp)
        side[r] = 0
        frontier = [r]
        while frontier:
            nxt = []
            for u in frontier:
                for w in iter_bits(G.adj[u] & mask):
                    if w not in side:
                        side[w] = side[u] ^ 1
                        nxt.append(w)
                    elif side[w] == side[u]:
                        return False
            frontier = nxt
    return True


def is_forest(G: Graph) -> bool:
    return G.m == G.n - len(G.components())

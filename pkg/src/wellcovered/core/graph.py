"""Bitset graph type and the neighborhood / induced-subgraph primitives."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import MalformedInput, NotStable, TooLarge, VertexOutOfRange
from .bits import VertexSet, iter_bits, mask_of

MAX_VERTICES = 64


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitset of ``v``.  Instances are immutable and
    hashable; equality compares the labeled structure only.  ``labels`` records,
    for graphs produced by :func:`induced_subgraph` and friends, which vertex
    of the parent graph each vertex came from.

    The bitset core is capped at 64 vertices.
    """

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None, labels: Sequence[int] | None = None):
        if n < 0:
            raise MalformedInput(f"negative vertex count {n}")
        if n > MAX_VERTICES:
            raise TooLarge(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise MalformedInput("adjacency length does not match n")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise VertexOutOfRange(f"neighbor of {v} outside 0..{n - 1}")
            if nb >> v & 1:
                raise MalformedInput(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not adj[u] >> v & 1:
                    raise MalformedInput(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self._hash = hash((n, adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[int] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise MalformedInput(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...], labels: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g.labels = labels
        g._hash = hash((n, adj))
        return g

    # -- basic queries -------------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def neighbors_of_set(self, mask: VertexSet) -> VertexSet:
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def is_stable(self, mask: VertexSet) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def isolated(self) -> VertexSet:
        """Z_G: the vertices of degree zero."""
        return mask_of(v for v in range(self.n) if not self.adj[v])

    def components(self, within: VertexSet | None = None) -> list[VertexSet]:
        """Connected components of the subgraph induced by ``within``, ordered by lowest vertex."""
        rest = self.vertices if within is None else within
        comps = []
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def edge_count_within(self, mask: VertexSet) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    # -- derived graphs ------------------------------------------------------

    def induced(self, mask: VertexSet) -> "Graph":
        """Induced subgraph on ``mask`` re-indexed in ascending order."""
        verts = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            nb = 0
            for u in iter_bits(self.adj[v] & mask):
                nb |= 1 << index[u]
            adj.append(nb)
        return Graph._trusted(len(verts), tuple(adj), tuple(self.labels[v] for v in verts))

    def without(self, mask: VertexSet) -> "Graph":
        """G minus the vertex set ``mask``."""
        return self.induced(self.vertices & ~mask)

    def relabeled(self) -> "Graph":
        """Same graph with identity labels."""
        return Graph._trusted(self.n, self.adj, tuple(range(self.n)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")


def _check_set(G: Graph, S: VertexSet) -> None:
    if S < 0 or S & ~G.vertices:
        raise VertexOutOfRange(f"vertex set {S:#x} not contained in 0..{G.n - 1}")


def neighborhoods(G: Graph, v: int) -> tuple[VertexSet, VertexSet]:
    """Open and closed neighborhood of ``v``."""
    _check_vertex(G, v)
    return G.adj[v], G.adj[v] | (1 << v)


def induced_subgraph(G: Graph, S: VertexSet) -> Graph:
    """G[S]; ``result.labels[i]`` is the vertex of ``G`` that became ``i``."""
    _check_set(G, S)
    return G.induced(S)


def closed_neighborhood_of_set(G: Graph, S: VertexSet) -> VertexSet:
    out = S
    for v in iter_bits(S):
        out |= G.adj[v]
    return out


def c_minor(G: Graph, S: VertexSet) -> Graph:
    """G minus the union of the closed neighborhoods of the stable set ``S``."""
    _check_set(G, S)
    if not G.is_stable(S):
        raise NotStable("c-minors are taken with respect to stable sets")
    return G.induced(G.vertices & ~closed_neighborhood_of_set(G, S))


def is_totally_disconnected(G: Graph) -> bool:
    return not any(G.adj)

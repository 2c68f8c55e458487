"""Deterministic constructors for the named graph families."""

from __future__ import annotations

from ..errors import BadParams
from .graph import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 0:
        raise BadParams("negative vertex count")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 0:
        raise BadParams("negative vertex count")
    return Graph(n)


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    if k < 0:
        raise BadParams("negative leaf count")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def whisker_of(H: Graph) -> Graph:
    """Attach one pendant vertex ``n + i`` to every vertex ``i`` of H."""
    n = H.n
    return Graph.from_edges(2 * n, H.edges() + [(i, n + i) for i in range(n)])


def corona(H: Graph, K: Graph) -> Graph:
    """H ∘ K: a copy of K per vertex of H, joined completely to that vertex."""
    edges = list(H.edges())
    nxt = H.n
    for v in range(H.n):
        edges.extend((nxt + a, nxt + b) for a, b in K.edges())
        edges.extend((v, nxt + a) for a in range(K.n))
        nxt += K.n
    return Graph.from_edges(nxt, edges)


def clique_sum(a: int, b: int, k: int) -> Graph:
    """k-clique-sum of C_a and C_b.

    C_a is the cycle 0..a-1; C_b runs through the shared vertices 0..k-1 and
    b-k new vertices.
    """
    if a < 3 or b < 3:
        raise BadParams("cycles need at least 3 vertices")
    if k < 1 or k > 3 or (k == 3 and (a != 3 or b != 3)):
        raise BadParams("cycles only share cliques of size 1, 2, or 3 (triangles)")
    edges = [(i, (i + 1) % a) for i in range(a)]
    if k == 3:
        return Graph.from_edges(3, edges)
    shared = list(range(k))
    new = list(range(a, a + b - k))
    ring = shared[::-1] + new if k == 2 else shared + new
    edges += [(ring[i], ring[(i + 1) % b]) for i in range(b)]
    unique = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return Graph.from_edges(a + b - k, unique)


def add_pendants(G: Graph, at: list[int]) -> Graph:
    """Attach a new leaf to each listed vertex (repeats allowed)."""
    edges = G.edges()
    for i, v in enumerate(at):
        if not 0 <= v < G.n:
            raise BadParams(f"vertex {v} outside 0..{G.n - 1}")
        edges.append((v, G.n + i))
    return Graph.from_edges(G.n + len(at), edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for H in graphs:
        edges.extend((u + off, v + off) for u, v in H.edges())
        off += H.n
    return Graph.from_edges(off, edges)


KINDS = ("cycle", "path", "complete", "empty", "star", "whisker", "corona", "clique-sum")


def family(kind: str, *params, of: Graph | None = None) -> Graph:
    """Dispatch by family name; ``of`` is the base graph for whisker/corona."""
    try:
        if kind == "cycle":
            return cycle(*params)
        if kind == "path":
            return path(*params)
        if kind == "complete":
            return complete(*params)
        if kind == "empty":
            return empty(*params)
        if kind == "star":
            return star(*params)
        if kind == "clique-sum":
            return clique_sum(*params)
        if kind in ("whisker", "corona"):
            if of is None:
                raise BadParams(f"{kind} needs a base graph")
            if kind == "whisker":
                if params:
                    raise BadParams("whisker takes no numeric parameters")
                return whisker_of(of)
            return corona(of, complete(*params) if params else Graph(1))
    except TypeError as exc:
        raise BadParams(str(exc)) from exc
    raise BadParams(f"unknown family {kind!r}")

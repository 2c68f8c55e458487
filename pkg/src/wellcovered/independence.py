"""Stable sets, covers, matchings and the well-covered / König decisions.

Internal helpers take ``(adj, mask)`` so that recursive searches can work on
induced subgraphs of one fixed graph without re-indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core.bits import VertexSet, iter_bits, lowest, mask_of, to_list
from .core.graph import Graph, _check_vertex
from .errors import InvalidMatching
from .verdict import Verdict

Edge = tuple[int, int]


@dataclass(frozen=True)
class FacetList:
    """Maximal stable sets of a graph (the facets of its independence complex)."""

    facets: tuple[VertexSet, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.bit_count() for f in self.facets)

    def is_pure(self) -> bool:
        return len(set(self.sizes)) <= 1

    def as_lists(self) -> list[list[int]]:
        return [to_list(f) for f in self.facets]

    def __len__(self) -> int:
        return len(self.facets)


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    def vertices(self) -> VertexSet:
        return mask_of(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class KonigCertificate:
    matching: Matching
    cover: VertexSet


@dataclass(frozen=True)
class PerfectKonigMatching:
    matching: Matching
    cover: VertexSet


# -- stable sets ---------------------------------------------------------------

def stable_facets(adj: Sequence[int], mask: VertexSet) -> list[VertexSet]:
    """Maximal stable sets of G[mask] by pivoting Bron-Kerbosch on the complement."""
    out: list[VertexSet] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        pivot, best = -1, 65
        for u in iter_bits(p | x):
            c = (p & (adj[u] | (1 << u))).bit_count()
            if c < best:
                pivot, best = u, c
                if c <= 1:
                    break
        if best == 0:
            return  # an excluded vertex can never be blocked from this branch
        for v in iter_bits(p & (adj[pivot] | (1 << pivot))):
            nb = adj[v] | (1 << v)
            expand(r | (1 << v), p & ~nb, x & ~nb)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, mask, 0)
    return out


def maximum_stable_set(adj: Sequence[int], mask: VertexSet) -> VertexSet:
    """A maximum stable set of G[mask]; lowest-index tie-breaking within the branching."""
    memo: dict[int, int] = {}

    def rec(m: int) -> int:
        if not m:
            return 0
        hit = memo.get(m)
        if hit is not None:
            return hit
        pick, top = -1, -1
        for v in iter_bits(m):
            d = (adj[v] & m).bit_count()
            if d <= 1:
                res = (1 << v) | rec(m & ~(adj[v] | (1 << v)))
                memo[m] = res
                return res
            if d > top:
                pick, top = v, d
        a = rec(m & ~(1 << pick))
        b = (1 << pick) | rec(m & ~(adj[pick] | (1 << pick)))
        res = b if b.bit_count() >= a.bit_count() else a
        memo[m] = res
        return res

    return rec(mask)


def alpha(adj: Sequence[int], mask: VertexSet) -> int:
    return maximum_stable_set(adj, mask).bit_count()


def maximum_matching(adj: Sequence[int], mask: VertexSet) -> list[Edge]:
    """Exact maximum matching of G[mask] by branch and bound over the lowest active vertex."""
    best: list[Edge] = []
    # greedy lower bound
    free = mask
    for v in iter_bits(mask):
        if free >> v & 1:
            nb = adj[v] & free & ~(1 << v)
            if nb:
                u = lowest(nb)
                best.append((v, u))
                free &= ~((1 << v) | (1 << u))

    def rec(m: int, cur: list[Edge]) -> None:
        nonlocal best
        active = 0
        leaf = -1
        for v in iter_bits(m):
            d = (adj[v] & m).bit_count()
            if d:
                active |= 1 << v
                if d == 1 and leaf < 0:
                    leaf = v
        if len(cur) + active.bit_count() // 2 <= len(best):
            return
        if not active:
            best = list(cur)
            return
        if leaf >= 0:
            # matching a leaf to its only neighbor is never worse
            u = lowest(adj[leaf] & m)
            cur.append((min(leaf, u), max(leaf, u)))
            rec(m & ~((1 << leaf) | (1 << u)), cur)
            cur.pop()
            return
        v = lowest(active)
        for u in iter_bits(adj[v] & m):
            cur.append((v, u))
            rec(m & ~((1 << v) | (1 << u)), cur)
            cur.pop()
        rec(m & ~(1 << v), cur)

    rec(mask, [])
    return sorted((min(a, b), max(a, b)) for a, b in best)


def iter_perfect_matchings(adj: Sequence[int], mask: VertexSet) -> Iterator[list[Edge]]:
    """All perfect matchings of G[mask]: lowest vertex paired with each neighbor in turn."""
    cur: list[Edge] = []

    def rec(m: int) -> Iterator[list[Edge]]:
        if not m:
            yield list(cur)
            return
        v = lowest(m)
        for u in iter_bits(adj[v] & m):
            cur.append((v, u))
            yield from rec(m & ~((1 << v) | (1 << u)))
            cur.pop()

    if mask.bit_count() % 2 == 0:
        yield from rec(mask)


# -- public operations ---------------------------------------------------------

def maximal_stable_sets(G: Graph) -> FacetList:
    """All maximal stable sets, sorted by their ascending vertex lists."""
    return FacetList(tuple(sorted(stable_facets(G.adj, G.vertices), key=to_list)))


def core_numbers(G: Graph) -> tuple[int, int, int]:
    """(beta, tau, nu): stability, covering and matching numbers."""
    beta = alpha(G.adj, G.vertices)
    return beta, G.n - beta, len(maximum_matching(G.adj, G.vertices))


def tau(G: Graph, within: VertexSet | None = None) -> int:
    mask = G.vertices if within is None else within
    return mask.bit_count() - alpha(G.adj, mask)


def minimum_vertex_cover(G: Graph) -> VertexSet:
    return G.vertices & ~maximum_stable_set(G.adj, G.vertices)


def is_vertex_cover(G: Graph, D: VertexSet) -> bool:
    return all(D >> u & 1 or D >> v & 1 for u, v in G.edges())


def is_well_covered(G: Graph) -> Verdict[FacetList]:
    """Yes with the pure facet list, or No with a smallest and a largest facet."""
    facets = maximal_stable_sets(G)
    if facets.is_pure():
        return Verdict.yes(facets)
    small = min(facets.facets, key=lambda f: f.bit_count())
    large = max(facets.facets, key=lambda f: f.bit_count())
    return Verdict.no((small, large))


def well_covered_mask(adj: Sequence[int], mask: VertexSet) -> bool:
    sizes = {f.bit_count() for f in stable_facets(adj, mask)}
    return len(sizes) <= 1


def is_very_well_covered(G: Graph) -> Verdict[FacetList]:
    if G.isolated():
        return Verdict.no("isolated vertex")
    wc = is_well_covered(G)
    if not wc.is_yes:
        return Verdict.no(wc.counterexample)
    t = G.n - max(wc.witness.sizes, default=0)
    if 2 * t != G.n:
        return Verdict.no({"tau": t, "n": G.n})
    return Verdict.yes(wc.witness)


def konig_certificate(G: Graph) -> Verdict[KonigCertificate]:
    """Yes with a maximum matching and a minimum cover of equal size, else No with (tau, nu)."""
    matching = maximum_matching(G.adj, G.vertices)
    cover = minimum_vertex_cover(G)
    if cover.bit_count() == len(matching):
        return Verdict.yes(KonigCertificate(Matching(tuple(matching)), cover))
    return Verdict.no((cover.bit_count(), len(matching)))


def konig_perfect_matchings(G: Graph, within: VertexSet | None = None) -> Iterator[PerfectKonigMatching]:
    """Every perfect matching of G[within] of König type, i.e. with g = tau."""
    mask = G.vertices if within is None else within
    n = mask.bit_count()
    if n % 2:
        return
    stable = maximum_stable_set(G.adj, mask)
    if 2 * stable.bit_count() != n:
        return  # tau != n/2, so no perfect matching can be of König type
    cover = mask & ~stable
    for edges in iter_perfect_matchings(G.adj, mask):
        yield PerfectKonigMatching(Matching(tuple(edges)), cover)


def perfect_konig_matching(G: Graph) -> Verdict[PerfectKonigMatching]:
    """First perfect matching of König type in search order, with a cover hitting each edge once."""
    if G.n % 2:
        return Verdict.no("odd number of vertices")
    for pm in konig_perfect_matchings(G):
        return Verdict.yes(pm)
    _, t, _ = core_numbers(G)
    if 2 * t != G.n:
        return Verdict.no({"tau": t, "g": G.n // 2})
    return Verdict.no("no perfect matching")


def _matching_edges(M) -> tuple[Edge, ...]:
    if isinstance(M, (PerfectKonigMatching, KonigCertificate)):
        M = M.matching
    if isinstance(M, Matching):
        return M.edges
    return tuple(tuple(e) for e in M)


def validate_matching(G: Graph, M, perfect: bool = False, within: VertexSet | None = None) -> tuple[Edge, ...]:
    edges = _matching_edges(M)
    used = 0
    for e in edges:
        if len(e) != 2:
            raise InvalidMatching(f"{e} is not a vertex pair")
        u, v = e
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise InvalidMatching(f"{e} is not an edge")
        if used >> u & 1 or used >> v & 1:
            raise InvalidMatching(f"{e} overlaps another matching edge")
        used |= (1 << u) | (1 << v)
    if perfect and used != (G.vertices if within is None else within):
        raise InvalidMatching("matching is not perfect")
    return edges


def exchange_condition(G: Graph, M, within: VertexSet | None = None) -> Verdict[None]:
    """Exchange property of a perfect matching.

    For edges f1 != f2 and x in f1, y in f2 with {x, y} a matching edge, the
    remaining endpoints must span an edge.  No carries ``(f1, f2, e_i)``.
    """
    mask = G.vertices if within is None else within
    edges = validate_matching(G, M, perfect=True, within=mask)
    adj = G.adj
    for e in edges:
        for x, y in (e, e[::-1]):
            for a in iter_bits(adj[x] & mask):
                for b in iter_bits(adj[y] & mask):
                    if a == y or b == x:
                        continue  # one of f1, f2 is e itself; the exchange returns the other
                    if a == b or not adj[a] >> b & 1:
                        f1 = (min(x, a), max(x, a))
                        f2 = (min(y, b), max(y, b))
                        return Verdict.no((f1, f2, e))
    return Verdict.yes(None)


def square_with_two_matching_edges(G: Graph, M) -> Verdict[tuple[int, int]]:
    """Yes((i, j)) (1-based) when some 4-cycle has e_i and e_j as opposite edges."""
    edges = validate_matching(G, M)
    adj = G.adj
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if (adj[a] >> c & 1 and adj[b] >> d & 1) or (adj[a] >> d & 1 and adj[b] >> c & 1):
                return Verdict.yes((i + 1, j + 1))
    return Verdict.no(None)


def is_critical_vertex(G: Graph, v: int) -> bool:
    """tau(G - v) < tau(G)."""
    _check_vertex(G, v)
    rest = G.vertices & ~(1 << v)
    return tau(G, rest) < tau(G)


def is_extendable_vertex(G: Graph, v: int) -> bool:
    """G and G - v well-covered with beta(G) = beta(G - v)."""
    _check_vertex(G, v)
    rest = G.vertices & ~(1 << v)
    if not well_covered_mask(G.adj, G.vertices) or not well_covered_mask(G.adj, rest):
        return False
    return alpha(G.adj, G.vertices) == alpha(G.adj, rest)

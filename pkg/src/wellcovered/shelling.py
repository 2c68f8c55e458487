"""Shellability of the independence complex: search, verification and recursive fast paths.

The implemented notion is nonpure shellability: an order F_1, ..., F_t of the
facets such that for all i < j some v in F_j \\ F_i and some l < j satisfy
F_j \\ F_l = {v}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .core.bits import VertexSet, iter_bits, to_list
from .core.graph import Graph
from .core.structure import girth
from .decomposition import _shedding_criterion, basic_5_cycles
from .errors import NotAPermutation, PreconditionViolated
from .independence import FacetList, stable_facets
from .verdict import Verdict

DEFAULT_FACET_CAP = 20
CAP_ENV = "WELLCOVERED_FACET_CAP"


@dataclass(frozen=True)
class ShellingOrder:
    order: tuple[VertexSet, ...]

    def as_lists(self) -> list[list[int]]:
        return [to_list(f) for f in self.order]


def facet_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_FACET_CAP


def is_pure(facets: FacetList | Sequence[VertexSet]) -> bool:
    fs = facets.facets if isinstance(facets, FacetList) else facets
    return len({f.bit_count() for f in fs}) <= 1


def _order_ok(order: Sequence[VertexSet]) -> bool:
    for j in range(1, len(order)):
        F = order[j]
        singles = 0
        for l in range(j):
            d = F & ~order[l]
            if d and not d & (d - 1):
                singles |= d
        for i in range(j):
            if not (F & ~order[i]) & singles:
                return False
    return True


def verify_shelling(facets: FacetList | Sequence[VertexSet], order: ShellingOrder | Sequence[VertexSet]) -> bool:
    """Check the shelling condition; the order must be a permutation of the facets."""
    fs = list(facets.facets if isinstance(facets, FacetList) else facets)
    seq = list(order.order if isinstance(order, ShellingOrder) else order)
    if len(seq) != len(fs) or sorted(seq) != sorted(fs):
        raise NotAPermutation("order is not a permutation of the facet list")
    return _order_ok(seq)


class CapExceeded(Exception):
    pass


def _search(facets: list[VertexSet]) -> list[VertexSet] | None:
    """Backtracking over chosen facet sets, memoizing the sets that cannot be completed.

    Larger facets are placed first: any shellable complex has a shelling in
    which facet sizes never increase, so only such orders are explored.
    """
    t = len(facets)
    if t <= 1:
        return list(facets)
    facets = sorted(facets, key=lambda f: (-f.bit_count(), to_list(f)))
    near = [0] * t
    for a in range(t):
        for b in range(t):
            if a != b:
                d = facets[a] & ~facets[b]
                if d and not d & (d - 1):
                    near[a] |= 1 << b
    lonely = [a for a in range(t) if not near[a]]
    if len(lonely) > 1:
        return None
    if lonely and facets[lonely[0]].bit_count() != facets[0].bit_count():
        return None  # it would have to come first, ahead of a larger facet
    starts = lonely or list(range(t))
    full = (1 << t) - 1
    dead: set[int] = set()
    order: list[int] = []

    def extend(chosen: int, smallest: int) -> bool:
        if chosen == full:
            return True
        if chosen in dead:
            return False
        for k in range(t):
            if chosen >> k & 1 or not near[k] & chosen:
                continue
            F = facets[k]
            if F.bit_count() > smallest:
                continue
            singles = 0
            for l in iter_bits(chosen):
                d = F & ~facets[l]
                if d and not d & (d - 1):
                    singles |= d
            if all((F & ~facets[i]) & singles for i in order):
                order.append(k)
                if extend(chosen | (1 << k), F.bit_count()):
                    return True
                order.pop()
        dead.add(chosen)
        return False

    for s in starts:
        order.append(s)
        if extend(1 << s, facets[s].bit_count()):
            return [facets[k] for k in order]
        order.pop()
    return None


def _shellable_mask(adj: Sequence[int], mask: VertexSet, cap: int) -> list[VertexSet] | None:
    facets = stable_facets(adj, mask)
    if len(facets) > cap:
        raise CapExceeded(len(facets))
    return _search(facets)


def shellable(G: Graph, cap: int | None = None) -> Verdict[ShellingOrder]:
    """Yes with a shelling order, No after exhaustive search, Unknown past the facet cap."""
    limit = facet_cap(cap)
    facets = stable_facets(G.adj, G.vertices)
    if len(facets) > limit:
        return Verdict.unknown(f"{len(facets)} facets exceed the cap of {limit}")
    order = _search(facets)
    if order is None:
        return Verdict.no(None)
    return Verdict.yes(ShellingOrder(tuple(order)))


def assemble_from_shedding(
    v: int, deletion: Sequence[VertexSet], link: Sequence[VertexSet]
) -> list[VertexSet]:
    """Concatenate a shelling of G - v with (link facets + v) for a shedding vertex v."""
    return list(deletion) + [F | (1 << v) for F in link]


def shellable_via_basic5(G: Graph, cap: int | None = None) -> Verdict[ShellingOrder]:
    """Decide shellability from a basic 5-cycle C: some shedding x on C with both branches shellable."""
    if not G.is_connected():
        raise PreconditionViolated("graph is not connected")
    cycles = basic_5_cycles(G)
    if not cycles:
        raise PreconditionViolated("graph has no basic 5-cycle")
    limit = facet_cap(cap)
    adj, full = G.adj, G.vertices
    C = cycles[0]
    heavy = sorted(v for v in C if G.degree(v) >= 3)
    tried = heavy + sorted(v for v in C if v not in heavy)
    for x in tried:
        if not _shedding_criterion(adj, full, x):
            continue
        try:
            deletion = _shellable_mask(adj, full & ~(1 << x), limit)
            if deletion is None:
                continue
            link = _shellable_mask(adj, full & ~(adj[x] | (1 << x)), limit)
        except CapExceeded as exc:
            return Verdict.unknown(f"{exc.args[0]} facets exceed the cap of {limit}")
        if link is None:
            continue
        return Verdict.yes(ShellingOrder(tuple(assemble_from_shedding(x, deletion, link))))
    return Verdict.no({"cycle": list(C)})


def shellable_girth11(G: Graph) -> Verdict[ShellingOrder]:
    """Leaf recursion for girth >= 11: shellable iff edgeless or some leaf x with neighbor y
    has both G - N[x] and G - N[y] shellable."""
    if girth(G) < 11:
        raise PreconditionViolated("girth is below 11")
    adj = G.adj
    memo: dict[int, list[VertexSet] | None] = {}

    def decide(mask: int) -> list[VertexSet] | None:
        if mask in memo:
            return memo[mask]
        res: list[VertexSet] | None = None
        if all(not adj[v] & mask for v in iter_bits(mask)):
            res = [mask]
        else:
            for x in iter_bits(mask):
                nb = adj[x] & mask
                if nb.bit_count() != 1:
                    continue
                y = nb.bit_length() - 1
                a = decide(mask & ~(nb | (1 << x)))
                if a is None:
                    continue
                b = decide(mask & ~(adj[y] | (1 << y)))
                if b is None:
                    continue
                # y sheds; facets of G - y are those of G - N[x] plus the isolated x
                res = assemble_from_shedding(y, [F | (1 << x) for F in a], b)
                break
        memo[mask] = res
        return res

    order = decide(G.vertices)
    if order is None:
        return Verdict.no(None)
    return Verdict.yes(ShellingOrder(tuple(order)))

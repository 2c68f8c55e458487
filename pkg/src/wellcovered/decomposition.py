"""Shedding vertices, structural tags and vertex decomposability with witness trees."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .core.bits import VertexSet, iter_bits, mask_of, to_list
from .core.graph import Graph, _check_vertex
from .core.structure import has_cycle_of_length, iter_cycles, vertices_on_cycles
from .errors import PreconditionViolated
from .independence import stable_facets
from .verdict import Verdict


# -- decomposition trees -------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    """A totally disconnected node; ``vertices`` is its whole vertex set."""

    vertices: VertexSet


@dataclass(frozen=True)
class Shed:
    vertex: int
    deletion: "DecompositionTree"  # tree for G - v
    link: "DecompositionTree"  # tree for G - N[v]


DecompositionTree = Union[Leaf, Shed]


def tree_to_json(t: DecompositionTree) -> dict:
    if isinstance(t, Leaf):
        return {"leaf": to_list(t.vertices)}
    return {"shed": t.vertex, "del": tree_to_json(t.deletion), "nbr": tree_to_json(t.link)}


def tree_from_json(obj: dict) -> DecompositionTree:
    if not isinstance(obj, dict):
        raise ValueError("decomposition tree nodes are JSON objects")
    if "leaf" in obj:
        return Leaf(mask_of(int(v) for v in obj["leaf"]))
    return Shed(int(obj["shed"]), tree_from_json(obj["del"]), tree_from_json(obj["nbr"]))


def _add_to_leaves(t: DecompositionTree, extra: VertexSet) -> DecompositionTree:
    if isinstance(t, Leaf):
        return Leaf(t.vertices | extra)
    return Shed(t.vertex, _add_to_leaves(t.deletion, extra), _add_to_leaves(t.link, extra))


def _graft(t: DecompositionTree, rest: DecompositionTree) -> DecompositionTree:
    """Tree for a disjoint union from trees of the two parts."""
    if isinstance(t, Leaf):
        return _add_to_leaves(rest, t.vertices)
    return Shed(t.vertex, _graft(t.deletion, rest), _graft(t.link, rest))


def verify_decomposition_tree(G: Graph, tree: DecompositionTree) -> bool:
    """Re-check every node: leaves are edgeless, every Shed vertex is shedding by definition."""
    adj = G.adj

    def check(mask: int, t: DecompositionTree) -> bool:
        if isinstance(t, Leaf):
            return t.vertices == mask and all(not adj[v] & mask for v in iter_bits(mask))
        v = t.vertex
        if not (0 <= v < G.n and mask >> v & 1):
            return False
        if not _shedding_by_definition(adj, mask, v):
            return False
        return check(mask & ~(1 << v), t.deletion) and check(mask & ~(adj[v] | (1 << v)), t.link)

    try:
        return check(G.vertices, tree)
    except (AttributeError, TypeError):
        return False


# -- shedding vertices ---------------------------------------------------------

def _shedding_criterion(adj: Sequence[int], mask: VertexSet, v: int) -> bool:
    # |N(v) \ N(S)| >= 1 for every stable S of G - N[v]; maximal S are the hardest
    nb = adj[v] & mask
    if not nb:
        return False
    rest = mask & ~(nb | (1 << v))
    for S in stable_facets(adj, rest):
        cover = 0
        for s in iter_bits(S):
            cover |= adj[s]
        if not nb & ~cover:
            return False
    return True


def _shedding_by_definition(adj: Sequence[int], mask: VertexSet, v: int) -> bool:
    # no stable set of G - N[v] is maximal in G - v (checking maximal ones suffices)
    without_v = mask & ~(1 << v)
    rest = without_v & ~adj[v]
    for S in stable_facets(adj, rest):
        blocked = S
        for s in iter_bits(S):
            blocked |= adj[s]
        if not without_v & ~blocked:
            return False
    return True


def is_shedding(G: Graph, v: int, method: str = "criterion") -> bool:
    """Is ``v`` a shedding vertex?

    ``method="criterion"`` uses the neighborhood-cover criterion;
    ``"definition"`` checks maximality of stable sets of G - N[v] in G - v.
    """
    _check_vertex(G, v)
    if method == "criterion":
        return _shedding_criterion(G.adj, G.vertices, v)
    if method == "definition":
        return _shedding_by_definition(G.adj, G.vertices, v)
    raise ValueError(f"unknown method {method!r}")


def _dominates_a_neighbor(adj: Sequence[int], mask: VertexSet, v: int) -> bool:
    closed_v = (adj[v] | (1 << v)) & mask
    for y in iter_bits(adj[v] & mask):
        if not ((adj[y] | (1 << y)) & mask) & ~closed_v:
            return True
    return False


def _candidates(G: Graph, mask: VertexSet) -> VertexSet:
    adj = G.adj
    out = 0
    undecided = 0
    for v in iter_bits(mask):
        if _dominates_a_neighbor(adj, mask, v):
            out |= 1 << v
        elif adj[v] & mask:
            undecided |= 1 << v
    if undecided:
        out |= vertices_on_cycles(G, 5, mask) & undecided
    return out


def shedding_candidates(G: Graph) -> VertexSet:
    """Vertices with a neighbor y such that N[y] ⊆ N[v], or lying on a 5-cycle.

    Every shedding vertex is retained, so the VD search only needs these.
    """
    return _candidates(G, G.vertices)


# -- structure tags --------------------------------------------------------------

def is_simplicial(G: Graph, v: int) -> bool:
    """N(v) is a clique; isolated vertices count as simplicial."""
    nb = G.adj[v]
    for u in iter_bits(nb):
        if (nb & ~(1 << u)) & ~G.adj[u]:
            return False
    return True


def pendant_matching(G: Graph, within: VertexSet | None = None) -> list[tuple[int, int]] | None:
    """Pendant edges of G[within] as (support, leaf) pairs if they form a perfect matching, else None."""
    mask = G.vertices if within is None else within
    adj = G.adj
    covered = 0
    pairs = []
    for v in iter_bits(mask):
        nb = adj[v] & mask
        if nb.bit_count() != 1:
            continue
        u = nb.bit_length() - 1
        if adj[u] & mask == 1 << v and u < v:
            continue  # an isolated edge, already taken from its lower end
        e = (1 << v) | (1 << u)
        if covered & e:
            return None
        covered |= e
        pairs.append((u, v))
    return sorted(pairs) if covered == mask else None


def is_whisker_graph(G: Graph, within: VertexSet | None = None) -> bool:
    """Do the pendant edges of G[within] form a perfect matching?  The empty graph qualifies."""
    return pendant_matching(G, within) is not None


@dataclass(frozen=True)
class SQCPartition:
    simplex_part: VertexSet
    square_part: VertexSet
    cycle_part: VertexSet
    cycles: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StructureTags:
    simplicial: VertexSet
    free: VertexSet
    simplexes: tuple[VertexSet, ...]
    basic5cycles: tuple[tuple[int, ...], ...]
    basic4cycles: tuple[tuple[int, int, int, int], ...]  # (a, b, c, d): a, b are the degree-2 pair
    is_whisker: bool
    sqc_partition: SQCPartition | None = field(default=None)


def simplexes(G: Graph) -> list[VertexSet]:
    """Distinct cliques N[v] over simplicial vertices v."""
    found = {G.closed(v) for v in range(G.n) if is_simplicial(G, v)}
    return sorted(found, key=to_list)


def basic_5_cycles(G: Graph) -> list[tuple[int, ...]]:
    """5-cycles with no two G-adjacent vertices both of degree >= 3 (so chordless)."""
    out = []
    for c in iter_cycles(G, 5):
        heavy = mask_of(v for v in c if G.degree(v) >= 3)
        if all(not (G.adj[v] & heavy) for v in iter_bits(heavy)):
            out.append(c)
    return out


def basic_4_cycles(G: Graph, simplex_list=None, basic5=None) -> list[tuple[int, int, int, int]]:
    """4-cycles a-b-c-d with deg(a) = deg(b) = 2 and c, d each in a simplex or basic 5-cycle."""
    simplex_list = simplexes(G) if simplex_list is None else simplex_list
    basic5 = basic_5_cycles(G) if basic5 is None else basic5
    anchored = 0
    for s in simplex_list:
        anchored |= s
    for c in basic5:
        anchored |= mask_of(c)
    out = []
    for cyc in iter_cycles(G, 4):
        for i in range(4):
            a, b, c, d = (cyc[(i + k) % 4] for k in range(4))
            if G.degree(a) == 2 and G.degree(b) == 2 and anchored >> c & 1 and anchored >> d & 1:
                out.append((a, b, c, d) if a < b else (b, a, d, c))
    return sorted(set(out))


def sqc_partition(G: Graph, simplex_list=None, basic5=None, basic4=None) -> SQCPartition | None:
    """Partition V into simplex vertices, basic-4-cycle degree-2 vertices and disjoint basic 5-cycles.

    The simplex and square parts are forced (all simplexes, all degree-2
    pairs of basic 4-cycles); the rest must be exactly covered by basic
    5-cycles, chosen lexicographically smallest first.
    """
    simplex_list = simplexes(G) if simplex_list is None else simplex_list
    basic5 = basic_5_cycles(G) if basic5 is None else basic5
    basic4 = basic_4_cycles(G, simplex_list, basic5) if basic4 is None else basic4
    S = 0
    for s in simplex_list:
        if S & s:
            return None
        S |= s
    Q = mask_of(v for c in basic4 for v in c[:2])
    if S & Q:
        return None
    rest = G.vertices & ~(S | Q)
    pieces = sorted((mask_of(c), c) for c in basic5 if not mask_of(c) & ~rest)
    pieces.sort(key=lambda p: sorted(p[1]))
    chosen: list[tuple[int, ...]] = []

    def cover(todo: int) -> bool:
        if not todo:
            return True
        v = todo & -todo
        for m, c in pieces:
            if m & v and not m & ~todo:
                chosen.append(c)
                if cover(todo & ~m):
                    return True
                chosen.pop()
        return False

    if not cover(rest):
        return None
    return SQCPartition(S, Q, rest, tuple(chosen))


def structure_tags(G: Graph) -> StructureTags:
    simp = simplexes(G)
    b5 = basic_5_cycles(G)
    b4 = basic_4_cycles(G, simp, b5)
    return StructureTags(
        simplicial=mask_of(v for v in range(G.n) if is_simplicial(G, v)),
        free=mask_of(v for v in range(G.n) if G.degree(v) == 1),
        simplexes=tuple(simp),
        basic5cycles=tuple(b5),
        basic4cycles=tuple(b4),
        is_whisker=is_whisker_graph(G),
        sqc_partition=sqc_partition(G, simp, b5, b4),
    )


# -- vertex decomposability ------------------------------------------------------

class _VDSearch:
    """One decision call: memo keyed by vertex subsets of the original graph."""

    def __init__(self, G: Graph, componentwise: bool = True):
        self.G = G
        self.adj = G.adj
        self.componentwise = componentwise
        self.memo: dict[int, DecompositionTree | None] = {}

    def decide(self, mask: int) -> DecompositionTree | None:
        if mask in self.memo:
            return self.memo[mask]
        adj = self.adj
        if all(not adj[v] & mask for v in iter_bits(mask)):
            res: DecompositionTree | None = Leaf(mask)
        elif self.componentwise:
            comps = self.G.components(mask)
            if len(comps) > 1:
                res = self._union(comps)
            else:
                res = self._search(mask)
        else:
            res = self._search(mask)
        self.memo[mask] = res
        return res

    def _union(self, comps: list[int]) -> DecompositionTree | None:
        isolated = 0
        trees = []
        for c in comps:
            if c & (c - 1) == 0:
                isolated |= c
                continue
            t = self.decide(c)
            if t is None:
                return None
            trees.append(t)
        out: DecompositionTree = Leaf(isolated)
        for t in reversed(trees):
            out = _graft(t, out)
        return out

    def _search(self, mask: int) -> DecompositionTree | None:
        adj = self.adj
        cand = _candidates(self.G, mask)
        order = to_list(cand) + to_list(mask & ~cand)
        for v in order:
            if not _shedding_criterion(adj, mask, v):
                continue
            d = self.decide(mask & ~(1 << v))
            if d is None:
                continue
            link = self.decide(mask & ~(adj[v] | (1 << v)))
            if link is None:
                continue
            return Shed(v, d, link)
        return None


def vertex_decomposable(G: Graph, componentwise: bool = True) -> Verdict[DecompositionTree]:
    """Yes with a decomposition tree, or No with the shedding vertices that were tried."""
    search = _VDSearch(G, componentwise)
    tree = search.decide(G.vertices)
    if tree is not None:
        return Verdict.yes(tree)
    shedding = [v for v in range(G.n) if _shedding_criterion(G.adj, G.vertices, v)]
    return Verdict.no({"shedding_vertices": shedding})


def vd_mask(G: Graph, mask: VertexSet, search: _VDSearch | None = None) -> bool:
    return (search or _VDSearch(G)).decide(mask) is not None


def free_vertex_vd_step(G: Graph, x: int) -> Verdict[DecompositionTree]:
    """Decide VD of a graph without 3- and 5-cycles from the two c-minors at a leaf x and its neighbor."""
    _check_vertex(G, x)
    if G.degree(x) != 1:
        raise PreconditionViolated(f"vertex {x} is not free")
    if has_cycle_of_length(G, 3) or has_cycle_of_length(G, 5):
        raise PreconditionViolated("graph has a 3-cycle or a 5-cycle")
    adj = G.adj
    y = adj[x].bit_length() - 1
    search = _VDSearch(G)
    first = search.decide(G.vertices & ~(adj[x] | (1 << x)))
    second = search.decide(G.vertices & ~(adj[y] | (1 << y)))
    if first is None or second is None:
        return Verdict.no({"G-N[x]": first is not None, "G-N[y]": second is not None})
    # y dominates x, so y sheds; G - y is G - N[x] plus the now isolated x
    return Verdict.yes(Shed(y, _add_to_leaves(first, 1 << x), second))

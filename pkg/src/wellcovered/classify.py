"""Class membership, structural characterizations and the Cohen-Macaulay oracles.

Each characterization is evaluated from primitives so that sweeps can compare
it against the definitional deciders.  Rationale strings name the criterion
that produced a verdict.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator

from .core.bits import VertexSet, iter_bits, mask_of
from .core.graph import Graph, _check_vertex
from .core.structure import distance_layers, girth, has_cycle_of_length, is_bipartite, iter_cycles
from .decomposition import (
    basic_4_cycles,
    basic_5_cycles,
    is_simplicial,
    is_whisker_graph,
    pendant_matching,
    sqc_partition,
    vertex_decomposable,
)
from .errors import InternalInconsistency, PreconditionViolated, StructureNotFound
from .independence import (
    Matching,
    PerfectKonigMatching,
    core_numbers,
    exchange_condition,
    is_very_well_covered,
    konig_certificate,
    konig_perfect_matchings,
    square_with_two_matching_edges,
    well_covered_mask,
)
from .shelling import shellable
from .verdict import Status, Verdict

# rationale labels
R_NOT_WC = "not well-covered (necessary condition fails)"
R_PURE_SHELLABLE = "pure and shellable (sufficient condition)"
R_KONIG = "König graph: square-free perfect König matching of G minus isolated vertices"
R_NO35 = "no 3- or 5-cycles: componentwise square-free perfect König matchings"
R_UNICYCLIC = "unicyclic: unmixed and not C4 or C7"
R_GIRTH6 = "connected girth >= 6: seven equivalent conditions"
R_TREE = "tree: whisker graph"
R_SHELLABLE = "shellable (sufficient condition)"
R_CM = "Cohen-Macaulay implies sequentially Cohen-Macaulay"
R_UNICYCLIC_SEQ = "unicyclic: cycle length 3 or 5, or a leaf at distance 1 from the cycle"
R_NONE = "no covered class"


@dataclass(frozen=True)
class ClassMembership:
    konig: bool
    no_3_5_cycles: bool
    no_3_5_7_cycles: bool
    bipartite: bool
    girth_ge_6: bool
    girth_ge_11: bool
    unicyclic: bool
    tree: bool
    whisker: bool
    sqc: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


@dataclass(frozen=True)
class CmReport:
    cm: Verdict
    seq_cm: Verdict
    rationale: dict[str, str] = field(default_factory=dict)


def _no_cycles(G: Graph, lengths) -> bool:
    return not any(has_cycle_of_length(G, k) for k in lengths)


def is_unicyclic(G: Graph) -> bool:
    return G.n >= 3 and G.is_connected() and G.m == G.n


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.is_connected() and G.m == G.n - 1


def classify(G: Graph) -> ClassMembership:
    _, tau, nu = core_numbers(G)
    g = girth(G)
    return ClassMembership(
        konig=tau == nu,
        no_3_5_cycles=_no_cycles(G, (3, 5)),
        no_3_5_7_cycles=_no_cycles(G, (3, 5, 7)),
        bipartite=is_bipartite(G),
        girth_ge_6=g >= 6,
        girth_ge_11=g >= 11,
        unicyclic=is_unicyclic(G),
        tree=is_tree(G),
        whisker=is_whisker_graph(G),
        sqc=sqc_partition(G) is not None,
    )


def _without_isolated(G: Graph) -> VertexSet:
    return G.vertices & ~G.isolated()


def _require_no_cycles(G: Graph, lengths) -> None:
    for k in lengths:
        if has_cycle_of_length(G, k):
            raise PreconditionViolated(f"graph has a {k}-cycle")


# -- matching criteria ------------------------------------------------------------

def theorem24(G: Graph) -> Verdict[PerfectKonigMatching]:
    """Well-coveredness of a graph without 3-, 5-, 7-cycles via the exchange property.

    The matching condition is applied to G minus its isolated vertices (an
    edgeless remainder qualifies with the empty matching).
    """
    _require_no_cycles(G, (3, 5, 7))
    rest = _without_isolated(G)
    if not rest:
        return Verdict.yes(PerfectKonigMatching(Matching(()), 0))
    found_any = False
    for pm in konig_perfect_matchings(G, rest):
        found_any = True
        if exchange_condition(G, pm, within=rest).is_yes:
            return Verdict.yes(pm)
    return Verdict.no("no perfect König matching" if not found_any else "every perfect König matching violates the exchange property")


def square_free_konig_matching(G: Graph, within: VertexSet) -> PerfectKonigMatching | None:
    """A perfect König matching of G[within] with no square on two of its edges."""
    for pm in konig_perfect_matchings(G, within):
        if square_with_two_matching_edges(G, pm.matching).is_no:
            return pm
    return None


@dataclass(frozen=True)
class Relabeling:
    """x_1..x_h form a minimal cover; {x_i, y_i} are the matching edges."""

    x: tuple[int, ...]
    y: tuple[int, ...]


def _orientations(G: Graph, edges: list[tuple[int, int]]) -> Iterator[tuple[list[int], list[int]]]:
    # choose y_i per edge so that Y stays stable (X is then a cover)
    adj = G.adj
    xs: list[int] = []
    ys: list[int] = []

    def rec(i: int, ymask: int) -> Iterator[tuple[list[int], list[int]]]:
        if i == len(edges):
            yield list(xs), list(ys)
            return
        u, v = edges[i]
        for x, y in ((u, v), (v, u)):
            if adj[y] & ymask:
                continue
            xs.append(x)
            ys.append(y)
            yield from rec(i + 1, ymask | (1 << y))
            xs.pop()
            ys.pop()

    yield from rec(0, 0)


def _condition_a(G: Graph, xs: list[int], ys: list[int]) -> bool:
    adj = G.adj
    h = len(xs)
    for i in range(h):
        for a in (xs[i], ys[i]):
            for j in range(h):
                if j == i or not adj[a] >> xs[j] & 1:
                    continue
                for k in range(h):
                    if k == i or k == j:
                        continue
                    if adj[ys[j]] >> xs[k] & 1 and not adj[a] >> xs[k] & 1:
                        return False
    return True


def _condition_pair(G: Graph, xs: list[int], ys: list[int]) -> bool:
    # a cover vertex x_i may not see both ends of another matching edge
    adj = G.adj
    for i, x in enumerate(xs):
        for j in range(len(xs)):
            if j != i and adj[x] >> ys[j] & 1 and adj[x] >> xs[j] & 1:
                return False
    return True


def _ordering(G: Graph, xs: list[int], ys: list[int]) -> list[int] | None:
    # edges x_i - y_j force e_i before e_j; topological order, lowest index first
    adj = G.adj
    h = len(xs)
    succ = [[j for j in range(h) if j != i and adj[xs[i]] >> ys[j] & 1] for i in range(h)]
    indeg = [0] * h
    for i in range(h):
        for j in succ[i]:
            indeg[j] += 1
    heap = [i for i in range(h) if not indeg[i]]
    heapq.heapify(heap)
    out = []
    while heap:
        i = heapq.heappop(heap)
        out.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if not indeg[j]:
                heapq.heappush(heap, j)
    return out if len(out) == h else None


def relabeling_search(G: Graph, within: VertexSet) -> Relabeling | None:
    """Search perfect matchings and orientations for an ordered relabeling.

    Conditions: Y = {y_i} stable; for distinct i, j, k and a_i in e_i, edges
    a_i-x_j and y_j-x_k force a_i-x_k; no x_i adjacent to both ends of another
    e_j; and x_i-y_j edges only for i <= j.
    """
    from .independence import iter_perfect_matchings

    for edges in iter_perfect_matchings(G.adj, within):
        for xs, ys in _orientations(G, edges):
            if not _condition_a(G, xs, ys) or not _condition_pair(G, xs, ys):
                continue
            order = _ordering(G, xs, ys)
            if order is not None:
                return Relabeling(tuple(xs[i] for i in order), tuple(ys[i] for i in order))
    return None


def verify_relabeling(G: Graph, within: VertexSet, r: Relabeling) -> bool:
    xs, ys = list(r.x), list(r.y)
    if len(xs) != len(ys) or mask_of(xs + ys) != within or 2 * len(xs) != within.bit_count():
        return False
    if not all(G.has_edge(x, y) for x, y in zip(xs, ys)):
        return False
    ymask = mask_of(ys)
    if any(G.adj[y] & ymask for y in ys):
        return False
    if not _condition_a(G, xs, ys) or not _condition_pair(G, xs, ys):
        return False
    return all(not G.has_edge(xs[i], ys[j]) or i <= j for i in range(len(xs)) for j in range(len(ys)))


@dataclass(frozen=True)
class Prop2Result:
    unmixed_vd: Verdict
    pure_shellable: Verdict
    cm: Verdict
    square_free: Verdict
    ordered_cover: Verdict
    relabeling: Relabeling | None

    def statuses(self) -> tuple[Status, ...]:
        return tuple(v.status for v in (self.unmixed_vd, self.pure_shellable, self.cm, self.square_free, self.ordered_cover))


def prop2_equivalences(G: Graph, cap: int | None = None) -> Prop2Result:
    """Five equivalent conditions for a König graph, each evaluated independently."""
    if not konig_certificate(G).is_yes:
        raise PreconditionViolated("graph is not König")
    unmixed = well_covered_mask(G.adj, G.vertices)
    c1 = Verdict.of(unmixed and vertex_decomposable(G).is_yes)
    if not unmixed:
        c2 = Verdict.no("not pure")
    else:
        sh = shellable(G, cap)
        c2 = Verdict.unknown(sh.reason) if sh.is_unknown else Verdict.of(sh.is_yes, sh.witness)
    rest = _without_isolated(G)
    if not rest:
        c4 = Verdict.yes(None)
        c5 = Verdict.yes(Relabeling((), ()))
        relabel = Relabeling((), ())
    else:
        pm = square_free_konig_matching(G, rest) if well_covered_mask(G.adj, rest) else None
        c4 = Verdict.of(pm is not None, pm)
        relabel = relabeling_search(G, rest)
        c5 = Verdict.of(relabel is not None, relabel)
    return Prop2Result(c1, c2, c2, c4, c5, relabel)


def theoremP1_condition(G: Graph) -> tuple[bool, list[PerfectKonigMatching]]:
    """Unmixed, and each non-isolated component has a square-free perfect König matching."""
    if not well_covered_mask(G.adj, G.vertices):
        return False, []
    found = []
    for comp in G.components():
        if comp & (comp - 1) == 0:
            continue
        pm = square_free_konig_matching(G, comp)
        if pm is None:
            return False, []
        found.append(pm)
    return True, found


def theoremP1(G: Graph) -> CmReport:
    """CM of a graph without 3- and 5-cycles via componentwise square-free König matchings."""
    _require_no_cycles(G, (3, 5))
    ok, matchings = theoremP1_condition(G)
    cm = Verdict.of(ok, matchings or None, theorem=R_NO35)
    seq = Verdict.yes(None, theorem=R_CM) if ok else Verdict.unknown(R_NONE)
    return CmReport(cm, seq, {"cm": R_NO35, "seq_cm": R_CM if ok else R_NONE})


def girth6_conditions(G: Graph, cap: int | None = None) -> dict[str, Verdict]:
    unmixed = well_covered_mask(G.adj, G.vertices)
    single = G.n == 1
    c7 = G.n == 7 and G.m == 7 and all(G.degree(v) == 2 for v in range(7))
    out: dict[str, Verdict] = {}
    out["unmixed_vd"] = Verdict.of(unmixed and vertex_decomposable(G).is_yes)
    if unmixed:
        sh = shellable(G, cap)
        out["pure_shellable"] = Verdict.unknown(sh.reason) if sh.is_unknown else Verdict.of(sh.is_yes)
    else:
        out["pure_shellable"] = Verdict.no(None)
    out["cm"] = Verdict.of(theoremP1_condition(G)[0])
    out["unmixed_konig"] = Verdict.of(unmixed and konig_certificate(G).is_yes)
    out["isolated_or_vwc"] = Verdict.of(single or is_very_well_covered(G).is_yes)
    out["unmixed_not_c7"] = Verdict.of(unmixed and not c7)
    out["isolated_or_unmixed_whisker"] = Verdict.of(single or (unmixed and is_whisker_graph(G)))
    return out


def girth6_corollary(G: Graph, cap: int | None = None) -> CmReport:
    if not G.is_connected() or G.n == 0:
        raise PreconditionViolated("graph is not connected")
    if girth(G) < 6:
        raise PreconditionViolated("girth is below 6")
    conds = girth6_conditions(G, cap)
    decided = {k: v.is_yes for k, v in conds.items() if not v.is_unknown}
    if len(set(decided.values())) > 1:
        raise InternalInconsistency(f"girth >= 6 conditions disagree: {decided}")
    flag = next(iter(decided.values()))
    cm = Verdict.of(flag, theorem=R_GIRTH6)
    seq = Verdict.yes(None, theorem=R_CM) if flag else Verdict.unknown(R_NONE)
    return CmReport(cm, seq, {"cm": R_GIRTH6, "seq_cm": R_CM if flag else R_NONE})


# -- unicyclic graphs ---------------------------------------------------------------

def unicyclic_cycle(G: Graph) -> tuple[int, ...]:
    if not is_unicyclic(G):
        raise PreconditionViolated("graph is not connected unicyclic")
    for k in range(3, G.n + 1):
        for c in iter_cycles(G, k):
            return c
    raise InternalInconsistency("unicyclic graph without a cycle")


def _is_cycle_graph(G: Graph, k: int) -> bool:
    return G.n == k and G.m == k and G.is_connected() and all(G.degree(v) == 2 for v in range(G.n))


def _hanging_whisker(G: Graph, within: VertexSet) -> bool:
    # G[within] is a whisker graph whose whiskers are pendant edges of G itself
    pairs = pendant_matching(G, within)
    return pairs is not None and all(G.degree(u) == 1 or G.degree(v) == 1 for u, v in pairs)


def unicyclic_wellcovered(G: Graph) -> Verdict[str]:
    """Well-coveredness of a connected unicyclic graph by the four structural cases.

    Yes carries the first case that holds, in the order a, b, c, d.  In case
    (c) the whiskers left after deleting the cycle must be pendant edges of G,
    so that the cycle and the whiskers partition G into simplexes and basic
    cycles.
    """
    C = unicyclic_cycle(G)
    cm = mask_of(C)
    k = len(C)
    if k in (3, 4, 5, 7) and G.n == k:
        return Verdict.yes("a")
    if is_whisker_graph(G):
        return Verdict.yes("b")
    if k == 3 or k == 5:
        if k == 3:
            ok = any(is_simplicial(G, v) for v in C)
        else:
            ok = any(set(C) == set(c) for c in basic_5_cycles(G))
        if ok and _hanging_whisker(G, G.vertices & ~cm):
            return Verdict.yes("c")
    if k == 4:
        for a, b, _, _ in basic_4_cycles(G):
            if is_whisker_graph(G, G.vertices & ~((1 << a) | (1 << b))):
                return Verdict.yes("d")
    return Verdict.no(None)


def unicyclic_ssd(G: Graph) -> Verdict[None]:
    """VD = shellable = sequentially CM for unicyclic graphs: cycle length 3 or 5, or a leaf next to the cycle."""
    C = unicyclic_cycle(G)
    if len(C) in (3, 5):
        return Verdict.yes(None, theorem=R_UNICYCLIC_SEQ)
    layers = distance_layers(G, mask_of(C))
    d1 = layers.layer(1)
    leaf = [v for v in iter_bits(d1) if G.degree(v) == 1]
    if leaf:
        return Verdict.yes(leaf[0], theorem=R_UNICYCLIC_SEQ)
    return Verdict.no(None, theorem=R_UNICYCLIC_SEQ)


def unicyclic_cm(G: Graph) -> CmReport:
    unicyclic_cycle(G)
    unmixed = well_covered_mask(G.adj, G.vertices)
    flag = unmixed and not _is_cycle_graph(G, 4) and not _is_cycle_graph(G, 7)
    seq = unicyclic_ssd(G)
    return CmReport(Verdict.of(flag, theorem=R_UNICYCLIC), seq, {"cm": R_UNICYCLIC, "seq_cm": R_UNICYCLIC_SEQ})


# -- the oracle -----------------------------------------------------------------------

def cm_oracle(G: Graph, cap: int | None = None) -> CmReport:
    """Cohen-Macaulay and sequentially Cohen-Macaulay as Yes / No / Unknown.

    No when not well-covered; Yes when pure and shellable; otherwise the
    strongest class criterion that covers G decides, else Unknown.
    """
    unmixed = well_covered_mask(G.adj, G.vertices)
    sh = shellable(G, cap)
    unicyclic = is_unicyclic(G)

    if sh.is_yes:
        seq, seq_why = Verdict.yes(None, theorem=R_SHELLABLE), R_SHELLABLE
    elif unicyclic:
        seq, seq_why = unicyclic_ssd(G), R_UNICYCLIC_SEQ
    else:
        seq, seq_why = None, R_NONE

    if not unmixed:
        cm, why = Verdict.no(None, theorem=R_NOT_WC), R_NOT_WC
    elif sh.is_yes:
        cm, why = Verdict.yes(None, theorem=R_PURE_SHELLABLE), R_PURE_SHELLABLE
    else:
        cm, why = _class_route(G, cap, unicyclic)

    if seq is None:
        if cm.is_yes:
            seq, seq_why = Verdict.yes(None, theorem=R_CM), R_CM
        else:
            seq = Verdict.unknown(R_NONE)
    return CmReport(cm, seq, {"cm": why, "seq_cm": seq_why})


def _class_route(G: Graph, cap: int | None, unicyclic: bool) -> tuple[Verdict, str]:
    if konig_certificate(G).is_yes:
        rest = _without_isolated(G)
        ok = not rest or square_free_konig_matching(G, rest) is not None
        return Verdict.of(ok, theorem=R_KONIG), R_KONIG
    if _no_cycles(G, (3, 5)):
        return Verdict.of(theoremP1_condition(G)[0], theorem=R_NO35), R_NO35
    if unicyclic:
        return unicyclic_cm(G).cm, R_UNICYCLIC
    if G.n and G.is_connected() and girth(G) >= 6:
        return girth6_corollary(G, cap).cm, R_GIRTH6
    if is_tree(G):
        return Verdict.of(is_whisker_graph(G), theorem=R_TREE), R_TREE
    return Verdict.unknown(R_NONE), R_NONE


# -- structural lemma -------------------------------------------------------------------

def lemma6_structure(G: Graph, M, z: int) -> tuple[int, ...]:
    """Pendant structure near z for a connected CM graph with a square-free perfect König matching.

    deg(z) >= 2: (w1, w2) with z-w1, w1-w2 edges, deg(w2) = 1 and {w1, w2} matched.
    deg(z) = 1: (w1, w2, w3) with {z, w1} and {w2, w3} matched, w1-w2 an edge, deg(w3) = 1.
    """
    _check_vertex(G, z)
    if isinstance(M, PerfectKonigMatching):
        M = M.matching
    edges = M.edges if isinstance(M, Matching) else tuple(tuple(e) for e in M)
    if not G.is_connected():
        raise PreconditionViolated("graph is not connected")
    if len(edges) < 2:
        raise PreconditionViolated("matching has fewer than two edges")
    from .independence import validate_matching

    validate_matching(G, edges, perfect=True)
    if not well_covered_mask(G.adj, G.vertices) or 2 * core_numbers(G)[1] != G.n:
        raise PreconditionViolated("matching is not of König type on an unmixed graph")
    if square_with_two_matching_edges(G, edges).is_yes:
        raise PreconditionViolated("matching has a square on two of its edges")
    mate = {}
    for a, b in edges:
        mate[a], mate[b] = b, a
    adj = G.adj
    if G.degree(z) >= 2:
        for w1 in iter_bits(adj[z]):
            w2 = mate[w1]
            if w2 != z and adj[w1] >> w2 & 1 and G.degree(w2) == 1:
                return (w1, w2)
    else:
        w1 = mate[z]
        for w2 in iter_bits(adj[w1]):
            if w2 == z:
                continue
            w3 = mate[w2]
            if G.degree(w3) == 1 and w3 not in (z, w1):
                return (w1, w2, w3)
    raise StructureNotFound(f"no pendant structure found around vertex {z}")


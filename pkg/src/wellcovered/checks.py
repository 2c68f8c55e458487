"""Per-graph equivalence checks run by sweeps.

A check returns ``None`` when the graph agrees with the statement under test
(or the statement does not apply) and a JSON-ready dict describing the
mismatch otherwise.  Yes witnesses produced along the way are re-certified
through :class:`WitnessTally`, so every sweep doubles as a witness audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .classify import (
    cm_oracle,
    girth6_corollary,
    is_unicyclic,
    prop2_equivalences,
    theorem24,
    theoremP1_condition,
    unicyclic_cm,
    unicyclic_ssd,
    unicyclic_wellcovered,
)
from .core.bits import iter_bits, mask_of, to_list
from .core.graph import Graph
from .core.structure import blocks, distance_layers, girth, has_cycle_of_length, is_bipartite, iter_cycles
from .decomposition import (
    _candidates,
    _shedding_by_definition,
    _shedding_criterion,
    _VDSearch,
    basic_5_cycles,
    is_simplicial,
    sqc_partition,
    vertex_decomposable,
)
from .independence import (
    alpha,
    core_numbers,
    exchange_condition,
    is_critical_vertex,
    is_extendable_vertex,
    is_very_well_covered,
    konig_certificate,
    konig_perfect_matchings,
    stable_facets,
    well_covered_mask,
)
from .report import certify_verdict
from .shelling import _search, shellable, verify_shelling
from .verdict import Verdict

Mismatch = Optional[dict]


@dataclass
class WitnessTally:
    """Counts Yes witnesses re-verified through the JSON certifier."""

    verified: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, G: Graph, prop: str, v: Verdict) -> bool:
        if not v.is_yes or v.witness is None:
            return True
        ok = certify_verdict(G, prop, v)
        if ok:
            self.verified += 1
        else:
            self.failed += 1
            self.failures.append({"edges": G.edges(), "n": G.n, "property": prop})
        return ok

    def merge(self, other: "WitnessTally") -> None:
        self.verified += other.verified
        self.failed += other.failed
        self.failures.extend(other.failures)


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[Graph, WitnessTally], Mismatch]
    default_filter: str = "all"


def _no_cycles(G: Graph, lengths) -> bool:
    return not any(has_cycle_of_length(G, k) for k in lengths)


def _vd(G: Graph, tally: WitnessTally) -> bool:
    v = vertex_decomposable(G)
    if v.is_yes and not tally.check(G, "vd", v):
        raise _WitnessFailure("vd")
    return v.is_yes


def _shellable(G: Graph, tally: WitnessTally, cap: int = 64) -> bool:
    v = shellable(G, cap)
    if v.is_unknown:
        raise _WitnessFailure(f"shellability undecided: {v.reason}")
    if v.is_yes and not tally.check(G, "shellable", v):
        raise _WitnessFailure("shellable")
    return v.is_yes


class _WitnessFailure(Exception):
    pass


def _guarded(fn: Callable[[Graph, WitnessTally], Mismatch]) -> Callable[[Graph, WitnessTally], Mismatch]:
    def run(G: Graph, tally: WitnessTally) -> Mismatch:
        try:
            return fn(G, tally)
        except _WitnessFailure as exc:
            return {"witness": str(exc)}

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- the checks -------------------------------------------------------------------

def check_shedding_criterion(G: Graph, tally: WitnessTally) -> Mismatch:
    """The neighborhood-cover criterion agrees with the definition of a shedding vertex."""
    full = G.vertices
    for v in range(G.n):
        a = _shedding_criterion(G.adj, full, v)
        b = _shedding_by_definition(G.adj, full, v)
        if a != b:
            return {"vertex": v, "criterion": a, "definition": b}
    return None


def check_shedding_candidates(G: Graph, tally: WitnessTally) -> Mismatch:
    """Every shedding vertex has a dominated neighbor or lies on a 5-cycle."""
    cand = _candidates(G, G.vertices)
    for v in range(G.n):
        if _shedding_criterion(G.adj, G.vertices, v) and not cand >> v & 1:
            return {"vertex": v}
    return None


def check_exchange_matching(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-, 7-cycles: the exchange-property matching condition holds iff well-covered."""
    if not _no_cycles(G, (3, 5, 7)):
        return None
    t = theorem24(G)
    wc = well_covered_mask(G.adj, G.vertices)
    if t.is_yes != wc:
        return {"matching_condition": t.is_yes, "well_covered": wc}
    if t.is_yes and t.witness.matching.edges:
        rest = G.vertices & ~G.isolated()
        if exchange_condition(G, t.witness, within=rest).is_no:
            return {"witness": "exchange property fails on returned matching"}
    return None


@_guarded
def check_square_free_matching(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-cycles: square-free König matchings per component, unmixed VD and pure shellable agree."""
    if not _no_cycles(G, (3, 5)):
        return None
    d = theoremP1_condition(G)[0]
    unmixed = well_covered_mask(G.adj, G.vertices)
    a = unmixed and _vd(G, tally)
    b = unmixed and _shellable(G, tally)
    if not d == a == b:
        return {"matching_condition": d, "unmixed_vd": a, "pure_shellable": b}
    return None


def check_konig_conditions(G: Graph, tally: WitnessTally) -> Mismatch:
    """König graphs: unmixed VD, pure shellable, square-free matching and ordered cover agree."""
    if not konig_certificate(G).is_yes:
        return None
    r = prop2_equivalences(G, cap=64)
    for prop, v in (("vd", vertex_decomposable(G)), ("shellable", r.pure_shellable)):
        if v.is_yes and v.witness is not None and not tally.check(G, prop, v):
            return {"witness": prop}
    vals = [v.status.value for v in (r.unmixed_vd, r.pure_shellable, r.square_free, r.ordered_cover)]
    if len(set(vals)) != 1:
        return dict(zip(("unmixed_vd", "pure_shellable", "square_free", "ordered_cover"), vals))
    return None


def check_twin_leaves(G: Graph, tally: WitnessTally) -> Mismatch:
    """Unmixed graphs have no vertex adjacent to two degree-1 vertices."""
    if not well_covered_mask(G.adj, G.vertices):
        return None
    leaves = mask_of(v for v in range(G.n) if G.degree(v) == 1)
    for v in range(G.n):
        if (G.adj[v] & leaves).bit_count() >= 2:
            return {"vertex": v, "leaves": to_list(G.adj[v] & leaves)}
    return None


def c_minor_masks(G: Graph) -> set[int]:
    """Vertex sets V - N[S] over all stable sets S (the empty set included)."""
    adj = G.adj
    out = set()

    def rec(start: int, removed: int, allowed: int) -> None:
        out.add(G.vertices & ~removed)
        for v in range(start, G.n):
            if allowed >> v & 1:
                closed = adj[v] | (1 << v)
                rec(v + 1, removed | closed, allowed & ~closed)

    rec(0, 0, G.vertices)
    return out


def check_c_minor_closure(G: Graph, tally: WitnessTally) -> Mismatch:
    """VD, shellable and unmixed pass from G to every c-minor."""
    adj = G.adj
    search = _VDSearch(G)
    full = G.vertices
    props = {
        "vd": lambda m: search.decide(m) is not None,
        "shellable": lambda m: _search(stable_facets(adj, m)) is not None,
        "unmixed": lambda m: well_covered_mask(adj, m),
    }
    minors = c_minor_masks(G)
    for name, holds in props.items():
        if not holds(full):
            continue
        for m in minors:
            if not holds(m):
                return {"property": name, "c_minor": to_list(m)}
    return None


def check_unicyclic(G: Graph, tally: WitnessTally) -> Mismatch:
    """Unicyclic graphs: structural cases vs well-covered, leaf condition vs VD and shellable,
    unmixed-and-not-C4/C7 vs unmixed VD."""
    if not is_unicyclic(G):
        return None
    wc = well_covered_mask(G.adj, G.vertices)
    cases = unicyclic_wellcovered(G)
    if cases.is_yes != wc:
        return {"cases": cases.witness, "well_covered": wc}
    vd = vertex_decomposable(G)
    if vd.is_yes and not tally.check(G, "vd", vd):
        return {"witness": "vd"}
    sh = shellable(G, 256)
    if sh.is_unknown:
        return {"shellable": sh.reason}
    if sh.is_yes and not tally.check(G, "shellable", sh):
        return {"witness": "shellable"}
    leaf = unicyclic_ssd(G).is_yes
    if not leaf == vd.is_yes == sh.is_yes:
        return {"leaf_condition": leaf, "vd": vd.is_yes, "shellable": sh.is_yes}
    cm = unicyclic_cm(G).cm.is_yes
    if cm != (wc and vd.is_yes):
        return {"unmixed_not_c4_c7": cm, "unmixed_vd": wc and vd.is_yes}
    return None


def check_tau_beta(G: Graph, tally: WitnessTally) -> Mismatch:
    """tau + beta = n, with tau from an exhaustive cover search."""
    beta, tau, _ = core_numbers(G)
    best = G.n
    for mask in range(1 << G.n):
        if mask.bit_count() < best and all(mask >> u & 1 or mask >> v & 1 for u, v in G.edges()):
            best = mask.bit_count()
    if tau + beta != G.n or best != tau:
        return {"beta": beta, "tau": tau, "brute_tau": best}
    return None


def check_unmixed_konig(G: Graph, tally: WitnessTally) -> Mismatch:
    """Unmixed König iff totally disconnected or G minus isolated vertices is very well-covered."""
    lhs = well_covered_mask(G.adj, G.vertices) and konig_certificate(G).is_yes
    rest = G.vertices & ~G.isolated()
    rhs = not rest or is_very_well_covered(G.induced(rest)).is_yes
    if lhs != rhs:
        return {"unmixed_konig": lhs, "empty_or_very_well_covered": rhs}
    return None


def check_wc_odd_free_konig(G: Graph, tally: WitnessTally) -> Mismatch:
    """Well-covered graphs without 3-, 5-, 7-cycles are König."""
    if not _no_cycles(G, (3, 5, 7)) or not well_covered_mask(G.adj, G.vertices):
        return None
    k = konig_certificate(G)
    if not k.is_yes:
        return {"konig": False}
    if not tally.check(G, "konig", k):
        return {"witness": "konig"}
    return None


def check_exchange_unmixed(G: Graph, tally: WitnessTally) -> Mismatch:
    """König graphs with edges: unmixed iff some perfect König matching of G minus isolated vertices has the exchange property."""
    if not konig_certificate(G).is_yes:
        return None
    rest = G.vertices & ~G.isolated()
    if not rest:
        return None
    unmixed = well_covered_mask(G.adj, G.vertices)
    exch = any(exchange_condition(G, pm, within=rest).is_yes for pm in konig_perfect_matchings(G, rest))
    if unmixed != exch:
        return {"unmixed": unmixed, "exchange": exch}
    return None


def check_extendable(G: Graph, tally: WitnessTally) -> Mismatch:
    """Unmixed graphs: extendable iff shedding iff (critical and G - v unmixed)."""
    if not well_covered_mask(G.adj, G.vertices):
        return None
    for v in range(G.n):
        ext = is_extendable_vertex(G, v)
        shed = _shedding_criterion(G.adj, G.vertices, v)
        crit = is_critical_vertex(G, v) and well_covered_mask(G.adj, G.vertices & ~(1 << v))
        if not ext == shed == crit:
            return {"vertex": v, "extendable": ext, "shedding": shed, "critical_unmixed": crit}
    return None


def check_critical_beta(G: Graph, tally: WitnessTally) -> Mismatch:
    """A vertex is critical iff beta(G - v) = beta(G), and criticality drops tau by exactly one."""
    beta = alpha(G.adj, G.vertices)
    tau = G.n - beta
    for v in range(G.n):
        rest = G.vertices & ~(1 << v)
        t2 = (G.n - 1) - alpha(G.adj, rest)
        crit = is_critical_vertex(G, v)
        if crit != (alpha(G.adj, rest) == beta) or (crit and t2 != tau - 1):
            return {"vertex": v}
    return None


def check_vd_componentwise(G: Graph, tally: WitnessTally) -> Mismatch:
    """Componentwise VD agrees with the direct definition."""
    a = vertex_decomposable(G, componentwise=True)
    b = vertex_decomposable(G, componentwise=False)
    if a.is_yes != b.is_yes:
        return {"componentwise": a.is_yes, "direct": b.is_yes}
    for v in (a, b):
        if v.is_yes and not tally.check(G, "vd", v):
            return {"witness": "vd"}
    return None


def check_shedding_assembly(G: Graph, tally: WitnessTally) -> Mismatch:
    """For a shedding vertex with shellable branches, concatenated shellings shell G."""
    adj, full = G.adj, G.vertices
    facets = stable_facets(adj, full)
    for v in range(G.n):
        if not _shedding_criterion(adj, full, v):
            continue
        d = _search(stable_facets(adj, full & ~(1 << v)))
        if d is None:
            continue
        link = _search(stable_facets(adj, full & ~(adj[v] | (1 << v))))
        if link is None:
            continue
        order = d + [F | (1 << v) for F in link]
        if not verify_shelling(facets, order):
            return {"vertex": v}
    return None


def check_shedding_no_four_cycles(G: Graph, tally: WitnessTally) -> Mismatch:
    """Without 4-cycles, a shedding vertex is on a 5-cycle or next to a simplicial z with |N[z]| <= 3."""
    if has_cycle_of_length(G, 4):
        return None
    on5 = 0
    for c in iter_cycles(G, 5):
        on5 |= mask_of(c)
    for v in range(G.n):
        if not _shedding_criterion(G.adj, G.vertices, v) or on5 >> v & 1:
            continue
        if not any(is_simplicial(G, z) and G.degree(z) <= 2 for z in iter_bits(G.adj[v])):
            return {"vertex": v}
    return None


def check_basic5_shedding(G: Graph, tally: WitnessTally) -> Mismatch:
    """Vertices of degree >= 3 on a basic 5-cycle are shedding."""
    for c in basic_5_cycles(G):
        for v in c:
            if G.degree(v) >= 3 and not _shedding_criterion(G.adj, G.vertices, v):
                return {"cycle": list(c), "vertex": v}
    return None


@_guarded
def check_vd_has_leaf(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-cycles: a VD graph with an edge has a degree-1 vertex."""
    if not G.m or not _no_cycles(G, (3, 5)):
        return None
    if _vd(G, tally) and not any(G.degree(v) == 1 for v in range(G.n)):
        return {"vd": True, "leaf": False}
    return None


@_guarded
def check_two_connected_not_vd(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-cycles: a 2-connected graph is not VD."""
    if G.n < 3 or not _no_cycles(G, (3, 5)):
        return None
    bd = blocks(G)
    if len(bd.blocks) != 1 or bd.blocks[0] != G.vertices:
        return None
    if _vd(G, tally):
        return {"vd": True}
    return None


@_guarded
def check_sqc(G: Graph, tally: WitnessTally) -> Mismatch:
    """Graphs with an SQC partition are VD and unmixed."""
    if sqc_partition(G) is None:
        return None
    vd = _vd(G, tally)
    wc = well_covered_mask(G.adj, G.vertices)
    if not (vd and wc):
        return {"vd": vd, "unmixed": wc}
    return None


def _two_connected_blocks(G: Graph) -> list[int]:
    return [b for b in blocks(G).two_connected()]


def check_bipartite_shellable_leaf(G: Graph, tally: WitnessTally) -> Mismatch:
    """Shellable bipartite graphs have a degree-1 vertex in D_1(B) for each 2-connected block B."""
    if not is_bipartite(G):
        return None
    bl = _two_connected_blocks(G)
    if not bl or _search(stable_facets(G.adj, G.vertices)) is None:
        return None
    for B in bl:
        d1 = distance_layers(G, B).layer(1)
        if not any(G.degree(x) == 1 for x in iter_bits(d1)):
            return {"block": to_list(B)}
    return None


def check_block_property_leaf(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-cycles: if G has P but a 2-connected block B lacks it, D_1(B) has a leaf (P = unmixed, shellable, VD)."""
    if not _no_cycles(G, (3, 5)):
        return None
    bl = _two_connected_blocks(G)
    if not bl:
        return None
    adj = G.adj
    props = {
        "unmixed": lambda m: well_covered_mask(adj, m),
        "shellable": lambda m: _search(stable_facets(adj, m)) is not None,
        "vd": lambda m: _VDSearch(G).decide(m) is not None,
    }
    for name, holds in props.items():
        if not holds(G.vertices):
            continue
        for B in bl:
            if holds(B):
                continue
            d1 = distance_layers(G, B).layer(1)
            if not any(G.degree(x) == 1 for x in iter_bits(d1)):
                return {"property": name, "block": to_list(B)}
    return None


def check_konig_cm_leaf(G: Graph, tally: WitnessTally) -> Mismatch:
    """Connected König CM graphs are K1 or have a degree-1 vertex."""
    if not G.n or not G.is_connected() or not konig_certificate(G).is_yes:
        return None
    if cm_oracle(G, 64).cm.is_yes and G.n > 1 and not any(G.degree(v) == 1 for v in range(G.n)):
        return {"cm": True, "leaf": False}
    return None


def check_cm_extendable_leaf(G: Graph, tally: WitnessTally) -> Mismatch:
    """No 3-, 5-cycles: a CM graph with an edge has an extendable vertex adjacent to a leaf."""
    if not G.m or not _no_cycles(G, (3, 5)) or not theoremP1_condition(G)[0]:
        return None
    for y in range(G.n):
        if any(G.degree(x) == 1 for x in iter_bits(G.adj[y])) and is_extendable_vertex(G, y):
            return None
    return {"extendable_next_to_leaf": False}


def check_girth6(G: Graph, tally: WitnessTally) -> Mismatch:
    """Connected, girth >= 6: the seven CM conditions agree (raises on disagreement)."""
    if not G.n or not G.is_connected() or girth(G) < 6:
        return None
    girth6_corollary(G, cap=64)
    return None


def check_cm_oracle_lattice(G: Graph, tally: WitnessTally) -> Mismatch:
    """CM Yes implies well-covered; shellable implies sequentially CM; VD implies shellable."""
    rep = cm_oracle(G, 64)
    wc = well_covered_mask(G.adj, G.vertices)
    if rep.cm.is_yes and not wc:
        return {"cm": "yes", "well_covered": False}
    sh = shellable(G, 64)
    if sh.is_yes and not rep.seq_cm.is_yes:
        return {"shellable": True, "seq_cm": rep.seq_cm.status.value}
    if vertex_decomposable(G).is_yes and sh.is_no:
        return {"vd": True, "shellable": False}
    return None


def check_seven_cycle_minor(G: Graph, tally: WitnessTally) -> Mismatch:
    """Unmixed connected, no 3-, 5-cycles: a 7-cycle inside a c-minor with three pairwise
    nonadjacent degree-2 vertices is itself a c-minor."""
    if not G.n or not G.is_connected() or not _no_cycles(G, (3, 5)):
        return None
    if not has_cycle_of_length(G, 7) or not well_covered_mask(G.adj, G.vertices):
        return None
    adj = G.adj
    minors = c_minor_masks(G)
    for H in minors:
        for c in iter_cycles(G, 7, H):
            low = [v for v in c if (adj[v] & H).bit_count() == 2]
            if _has_independent_triple(adj, H, low) and mask_of(c) not in minors:
                return {"c_minor": to_list(H), "cycle": list(c)}
    return None


def _has_independent_triple(adj, H: int, vs: list[int]) -> bool:
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            if adj[vs[i]] >> vs[j] & 1:
                continue
            for l in range(j + 1, k):
                if not adj[vs[l]] & ((1 << vs[i]) | (1 << vs[j])):
                    return True
    return False


CHECKS: dict[str, Check] = {
    c.name: c
    for c in (
        Check("shedding-criterion", check_shedding_criterion.__doc__, check_shedding_criterion),
        Check("shedding-candidates", check_shedding_candidates.__doc__, check_shedding_candidates),
        Check("exchange-matching", check_exchange_matching.__doc__, check_exchange_matching, "no-3-5-7-cycles"),
        Check("square-free-matching", check_square_free_matching.__doc__, check_square_free_matching, "no-3-5-cycles"),
        Check("konig-conditions", check_konig_conditions.__doc__, check_konig_conditions, "konig"),
        Check("twin-leaves", check_twin_leaves.__doc__, check_twin_leaves),
        Check("c-minor-closure", check_c_minor_closure.__doc__, check_c_minor_closure),
        Check("unicyclic", check_unicyclic.__doc__, check_unicyclic, "unicyclic"),
        Check("tau-beta", check_tau_beta.__doc__, check_tau_beta),
        Check("unmixed-konig", check_unmixed_konig.__doc__, check_unmixed_konig),
        Check("odd-cycle-free-konig", check_wc_odd_free_konig.__doc__, check_wc_odd_free_konig, "no-3-5-7-cycles"),
        Check("exchange-unmixed", check_exchange_unmixed.__doc__, check_exchange_unmixed, "konig"),
        Check("extendable", check_extendable.__doc__, check_extendable),
        Check("critical-beta", check_critical_beta.__doc__, check_critical_beta),
        Check("vd-componentwise", check_vd_componentwise.__doc__, check_vd_componentwise),
        Check("shedding-assembly", check_shedding_assembly.__doc__, check_shedding_assembly),
        Check("shedding-no-4-cycles", check_shedding_no_four_cycles.__doc__, check_shedding_no_four_cycles),
        Check("basic5-shedding", check_basic5_shedding.__doc__, check_basic5_shedding),
        Check("vd-has-leaf", check_vd_has_leaf.__doc__, check_vd_has_leaf, "no-3-5-cycles"),
        Check("two-connected-not-vd", check_two_connected_not_vd.__doc__, check_two_connected_not_vd, "no-3-5-cycles"),
        Check("sqc", check_sqc.__doc__, check_sqc),
        Check("bipartite-shellable-leaf", check_bipartite_shellable_leaf.__doc__, check_bipartite_shellable_leaf, "bipartite"),
        Check("block-property-leaf", check_block_property_leaf.__doc__, check_block_property_leaf, "no-3-5-cycles"),
        Check("konig-cm-leaf", check_konig_cm_leaf.__doc__, check_konig_cm_leaf, "konig"),
        Check("cm-extendable-leaf", check_cm_extendable_leaf.__doc__, check_cm_extendable_leaf, "no-3-5-cycles"),
        Check("girth6", check_girth6.__doc__, check_girth6),
        Check("cm-lattice", check_cm_oracle_lattice.__doc__, check_cm_oracle_lattice),
        Check("seven-cycle-minor", check_seven_cycle_minor.__doc__, check_seven_cycle_minor, "no-3-5-cycles"),
    )
}

# names used by earlier command lines
ALIASES = {
    "shedding-lemma4": "shedding-criterion",
    "ext": "shedding-candidates",
    "theorem24": "exchange-matching",
    "theoremP1": "square-free-matching",
    "prop2": "konig-conditions",
    "lemma21": "twin-leaves",
    "closure": "c-minor-closure",
}


def resolve_check(name: str) -> Check:
    key = ALIASES.get(name, name)
    if key not in CHECKS:
        raise KeyError(name)
    return CHECKS[key]

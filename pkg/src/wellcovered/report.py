"""JSON reports and witness certification."""

from __future__ import annotations

import json
import time
from importlib import resources
from typing import Any, Callable

from .classify import ClassMembership, classify, cm_oracle
from .core.bits import mask_of, to_list
from .core.graph import Graph
from .decomposition import tree_from_json, tree_to_json, verify_decomposition_tree, vertex_decomposable
from .errors import NotAPermutation
from .independence import (
    is_very_well_covered,
    is_well_covered,
    konig_certificate,
    maximal_stable_sets,
    perfect_konig_matching,
)
from .shelling import ShellingOrder, is_pure, shellable, verify_shelling
from .verdict import Verdict

SCHEMA_VERSION = "1.0"

PROPERTIES = (
    "well_covered",
    "very_well_covered",
    "konig",
    "perfect_konig_matching",
    "vd",
    "shellable",
    "pure",
    "cm",
    "seq_cm",
)

CERTIFIABLE = ("well_covered", "very_well_covered", "konig", "perfect_konig_matching", "vd", "shellable")


def load_schema() -> dict:
    return json.loads(resources.files("wellcovered").joinpath("report.schema.json").read_text())


# -- witness serialization -------------------------------------------------------

def _sets(masks) -> list[list[int]]:
    return [to_list(m) for m in masks]


def witness_to_json(prop: str, witness: Any) -> Any:
    if witness is None:
        return None
    if prop in ("well_covered", "very_well_covered"):
        return _sets(witness.facets)
    if prop in ("konig", "perfect_konig_matching"):
        return {"matching": [list(e) for e in witness.matching.edges], "cover": to_list(witness.cover)}
    if prop == "vd":
        return tree_to_json(witness)
    if prop == "shellable":
        return _sets(witness.order)
    return _plain(witness)


def counterexample_to_json(prop: str, cx: Any) -> Any:
    if cx is None:
        return None
    if prop == "well_covered" and isinstance(cx, tuple):
        return _sets(cx)
    if prop == "konig" and isinstance(cx, tuple):
        return {"tau": cx[0], "nu": cx[1]}
    return _plain(cx)


def _plain(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "__dict__"):
        return _plain(vars(x))
    return str(x)


def verdict_to_json(prop: str, v: Verdict, witness: bool = True) -> dict:
    out: dict[str, Any] = {"status": v.status.value}
    if v.is_yes and witness and v.witness is not None:
        out["witness"] = witness_to_json(prop, v.witness)
    if v.is_no and v.counterexample is not None:
        out["counterexample"] = counterexample_to_json(prop, v.counterexample)
    if v.is_unknown:
        out["reason"] = v.reason
    if v.theorem:
        out["theorem"] = v.theorem
    return out


# -- certification ----------------------------------------------------------------

def _edge_list(obj) -> list[tuple[int, int]]:
    return [(int(u), int(v)) for u, v in obj]


def _certify_facets(G: Graph, obj, very: bool) -> bool:
    listed = sorted(sorted(int(v) for v in f) for f in obj)
    if listed != maximal_stable_sets(G).as_lists():
        return False
    if len({len(f) for f in listed}) > 1:
        return False
    if very:
        return not G.isolated() and 2 * (G.n - len(listed[0])) == G.n
    return True


def _certify_cover_matching(G: Graph, obj, perfect: bool) -> bool:
    edges = _edge_list(obj["matching"])
    cover = mask_of(int(v) for v in obj["cover"])
    used = 0
    for u, v in edges:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            return False
        e = (1 << u) | (1 << v)
        if used & e:
            return False
        used |= e
        if perfect and (cover & e).bit_count() != 1:
            return False
    if cover & ~G.vertices or any(not (cover >> u & 1 or cover >> v & 1) for u, v in G.edges()):
        return False
    if perfect and used != G.vertices:
        return False
    return cover.bit_count() == len(edges)


def certify(G: Graph, prop: str, witness: Any) -> bool:
    """Re-verify a JSON witness for ``prop`` against G without trusting the producer."""
    if prop not in CERTIFIABLE:
        raise ValueError(f"property {prop!r} has no checkable witness; choose from {', '.join(CERTIFIABLE)}")
    try:
        if prop in ("well_covered", "very_well_covered"):
            return _certify_facets(G, witness, prop == "very_well_covered")
        if prop in ("konig", "perfect_konig_matching"):
            return _certify_cover_matching(G, witness, prop == "perfect_konig_matching")
        if prop == "vd":
            return verify_decomposition_tree(G, tree_from_json(witness))
        if prop == "shellable":
            order = [mask_of(int(v) for v in f) for f in witness]
            return verify_shelling(maximal_stable_sets(G), ShellingOrder(tuple(order)))
    except (NotAPermutation, KeyError, TypeError, ValueError, AttributeError):
        return False
    return False


def certify_verdict(G: Graph, prop: str, v: Verdict) -> bool:
    """JSON round-trip of an in-memory Yes witness, then certification."""
    payload = json.loads(json.dumps(witness_to_json(prop, v.witness)))
    return certify(G, prop, payload)


# -- analysis ---------------------------------------------------------------------

def _evaluators(G: Graph, cap: int | None) -> dict[str, Callable[[], Verdict]]:
    cache: dict[str, Any] = {}

    def cm_report():
        if "cm" not in cache:
            cache["cm"] = cm_oracle(G, cap)
        return cache["cm"]

    def pure():
        return Verdict.of(is_pure(maximal_stable_sets(G)))

    return {
        "well_covered": lambda: is_well_covered(G),
        "very_well_covered": lambda: is_very_well_covered(G),
        "konig": lambda: konig_certificate(G),
        "perfect_konig_matching": lambda: perfect_konig_matching(G),
        "vd": lambda: vertex_decomposable(G),
        "shellable": lambda: shellable(G, cap),
        "pure": pure,
        "cm": lambda: cm_report().cm,
        "seq_cm": lambda: cm_report().seq_cm,
    }


def analyze(
    G: Graph,
    properties: list[str] | None = None,
    witness: bool = True,
    fmt: str = "edgelist",
    cap: int | None = None,
) -> dict:
    props = list(properties or PROPERTIES)
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}")
    evaluators = _evaluators(G, cap)
    out_props: dict[str, dict] = {}
    timing: dict[str, float] = {}
    for p in props:
        t0 = time.perf_counter()
        v = evaluators[p]()
        timing[p] = round((time.perf_counter() - t0) * 1000, 3)
        out_props[p] = verdict_to_json(p, v, witness)
    classes: ClassMembership = classify(G)
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": {"n": G.n, "edges": [list(e) for e in G.edges()], "format": fmt},
        "classes": classes.as_dict(),
        "properties": out_props,
        "timing": timing,
    }


def render_text(report: dict) -> str:
    g = report["graph"]
    lines = [f"graph: n={g['n']} m={len(g['edges'])}"]
    flags = [k for k, v in report["classes"].items() if v]
    lines.append("classes: " + (", ".join(flags) if flags else "-"))
    width = max((len(p) for p in report["properties"]), default=0)
    for p, body in report["properties"].items():
        extra = body.get("reason") or body.get("theorem") or ""
        lines.append(f"  {p.ljust(width)}  {body['status']:<7}  {extra}".rstrip())
    return "\n".join(lines) + "\n"


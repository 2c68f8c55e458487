"""Acceptance suite: one test per criterion, each reporting a single pass/fail line.

The witness-integrity criterion runs last so that it can count the witnesses
certified by every sweep before it.

Run ``pytest tests/test_acceptance.py -v``; the summary block at the end of the
run lists every criterion with its measured counts and timings.
"""

from __future__ import annotations

import json
import time

from oracles import matching_number, min_vertex_cover_size, simple_cycles, well_covered
from wellcovered.checks import CHECKS, WitnessTally
from wellcovered.classify import cm_oracle
from wellcovered.cli import main
from wellcovered.core.enumerate import enumerate_labeled_graphs, enumerate_unicyclic
from wellcovered.core.families import clique_sum, cycle
from wellcovered.core.formats import emit_graph
from wellcovered.core.structure import girth
from wellcovered.decomposition import vertex_decomposable
from wellcovered.independence import is_well_covered, konig_certificate, perfect_konig_matching, is_very_well_covered
from wellcovered.report import CERTIFIABLE, witness_to_json
from wellcovered.shelling import shellable

# time limits in seconds
LIMIT_CYCLES = 5
LIMIT_SHEDDING = 600
LIMIT_EXCHANGE = 600
LIMIT_UNICYCLIC = 900
CYCLE_CAP = 64

# Yes witnesses re-certified by every sweep in this module
TALLY = WitnessTally()


def report(record_property, criterion: int, title: str, detail: str) -> None:
    record_property("criterion", criterion)
    record_property("title", title)
    record_property("detail", detail)


def sweep(check_name: str, graphs) -> tuple[int, list, float]:
    check = CHECKS[check_name]
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for G in graphs:
        checked += 1
        m = check.run(G, TALLY)
        if m is not None:
            bad.append((G.n, G.edges(), m))
    return checked, bad, time.perf_counter() - t0


def labeled(max_n: int, filt: str | None = None):
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n, filt)


def test_criterion_01_cycle_ladder(record_property):
    t0 = time.perf_counter()
    wrong = []
    for n in range(3, 12):
        G = cycle(n)
        wc = is_well_covered(G).is_yes
        vd = vertex_decomposable(G)
        sh = shellable(G, cap=CYCLE_CAP)
        TALLY.check(G, "vd", vd)
        TALLY.check(G, "shellable", sh)
        if wc != (n in (3, 4, 5, 7)):
            wrong.append((n, "well_covered", wc))
        if sh.is_unknown or vd.is_yes != (n in (3, 5)) or sh.is_yes != (n in (3, 5)):
            wrong.append((n, "vd/shellable", vd.status.value, sh.status.value))
    elapsed = time.perf_counter() - t0
    report(record_property, 1, "cycle ladder C3..C11", f"{len(wrong)} mismatches, {elapsed:.2f}s (limit {LIMIT_CYCLES}s)")
    assert not wrong
    assert elapsed < LIMIT_CYCLES


def test_criterion_02_shedding_criterion(record_property):
    checked, bad, elapsed = sweep("shedding-criterion", labeled(6))
    n6 = sum(1 for _ in enumerate_labeled_graphs(6))
    report(record_property, 2, "shedding criterion = definition, n <= 6", f"{checked} graphs ({n6} at n=6), {len(bad)} mismatches, {elapsed:.1f}s")
    assert n6 == 32768
    assert not bad, bad[:3]
    assert elapsed < LIMIT_SHEDDING


def test_criterion_03_candidate_filter(record_property):
    checked, bad, elapsed = sweep("shedding-candidates", labeled(6))
    report(record_property, 3, "shedding vertices are candidates, n <= 6", f"{checked} graphs, {len(bad)} violations, {elapsed:.1f}s")
    assert not bad, bad[:3]


def test_criterion_04_exchange_matching(record_property):
    checked, bad, elapsed = sweep("exchange-matching", labeled(7, "no-3-5-7-cycles"))
    report(record_property, 4, "exchange matching = well-covered, no 3/5/7-cycles, n <= 7", f"{checked} graphs, {len(bad)} mismatches, {elapsed:.1f}s (limit {LIMIT_EXCHANGE}s)")
    assert not bad, bad[:3]
    assert elapsed < LIMIT_EXCHANGE


def test_criterion_05_square_free_matching(record_property):
    before = TALLY.verified
    checked, bad, elapsed = sweep("square-free-matching", labeled(7, "no-3-5-cycles"))
    report(record_property, 5, "square-free Konig matching = unmixed VD = pure shellable, no 3/5-cycles, n <= 7", f"{checked} graphs, {len(bad)} mismatches, {TALLY.verified - before} witnesses, {elapsed:.1f}s")
    assert not bad, bad[:3]


def test_criterion_06_konig_conditions(record_property):
    checked, bad, elapsed = sweep("konig-conditions", labeled(6, "konig"))
    report(record_property, 6, "Konig graphs: five conditions agree, n <= 6", f"{checked} graphs, {len(bad)} mismatches, {elapsed:.1f}s")
    assert checked > 0
    assert not bad, bad[:3]


def test_criterion_07_unicyclic(record_property):
    checked, bad, elapsed = sweep("unicyclic", enumerate_unicyclic(9))
    report(record_property, 7, "unicyclic suite, cycle 3..7, n <= 9", f"{checked} graphs, {len(bad)} mismatches, {elapsed:.1f}s (limit {LIMIT_UNICYCLIC}s)")
    assert checked > 1000
    assert not bad, bad[:3]
    assert elapsed < LIMIT_UNICYCLIC


def test_criterion_08_fig9(record_property, fig9):
    lengths = {len(c) for c in simple_cycles(fig9)}
    claims = {
        "unmixed": well_covered(fig9),
        "girth 4": min(lengths) == 4 and girth(fig9) == 4,
        "no 3-/5-cycle": not lengths & {3, 5},
        "not Konig": min_vertex_cover_size(fig9) != matching_number(fig9) and konig_certificate(fig9).is_no,
        "cm No": cm_oracle(fig9, cap=CYCLE_CAP).cm.is_no,
    }
    failed = [k for k, ok in claims.items() if not ok]
    report(record_property, 8, "9-vertex fixture", f"{len(claims) - len(failed)}/5 claims hold" + (f", failed: {failed}" if failed else ""))
    assert not failed


def test_criterion_09_twin_leaves(record_property):
    checked, bad, elapsed = sweep("twin-leaves", labeled(6))
    report(record_property, 9, "no unmixed graph has a vertex with two leaf neighbours, n <= 6", f"{checked} graphs, {len(bad)} violations, {elapsed:.1f}s")
    assert not bad, bad[:3]


def test_criterion_10_c_minor_closure(record_property):
    checked, bad, elapsed = sweep("c-minor-closure", labeled(6))
    report(record_property, 10, "VD, shellable, unmixed closed under c-minors, n <= 6", f"{checked} graphs, {len(bad)} violations, {elapsed:.1f}s")
    assert not bad, bad[:3]


def test_criterion_12_clique_sums(record_property):
    wrong = []
    for r1 in range(3, 8):
        for r2 in range(r1, 8):
            G = clique_sum(r1, r2, 2)
            v = vertex_decomposable(G)
            TALLY.check(G, "vd", v)
            if v.is_yes != (r1 == 3 or r1 == r2 == 5):
                wrong.append((r1, r2, v.status.value))
    report(record_property, 12, "2-clique-sums of C_r1, C_r2: VD iff r1 = 3 or r1 = r2 = 5", f"15 pairs, {len(wrong)} mismatches")
    assert not wrong


def _verdicts(G):
    return {
        "well_covered": is_well_covered(G),
        "very_well_covered": is_very_well_covered(G),
        "konig": konig_certificate(G),
        "perfect_konig_matching": perfect_konig_matching(G),
        "vd": vertex_decomposable(G),
        "shellable": shellable(G, cap=CYCLE_CAP),
    }


def test_criterion_11_witness_integrity(record_property, tmp_path, capsys):
    # every Yes of every property on every graph up to five vertices, through the CLI certifier
    via_cli = cli_failed = 0
    gfile = tmp_path / "g.txt"
    wfile = tmp_path / "w.json"
    for G in labeled(5):
        gfile.write_bytes(emit_graph(G, "edgelist"))
        for prop, v in _verdicts(G).items():
            assert prop in CERTIFIABLE
            if not v.is_yes:
                continue
            wfile.write_text(json.dumps(witness_to_json(prop, v.witness)))
            code = main(["certify", str(gfile), "--property", prop, "--witness-file", str(wfile)])
            via_cli += 1
            cli_failed += code != 0
    capsys.readouterr()
    total = TALLY.verified + TALLY.failed + via_cli
    report(
        record_property,
        11,
        "every Yes witness re-verifies",
        f"{TALLY.verified} sweep witnesses certified, {TALLY.failed} failed; {via_cli} CLI certify runs, {cli_failed} failed",
    )
    assert total > 0
    assert TALLY.failed == 0, TALLY.failures[:3]
    assert cli_failed == 0

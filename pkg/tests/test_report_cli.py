from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from wellcovered.cli import main
from wellcovered.core.families import clique_sum, cycle, path, whisker_of
from wellcovered.core.formats import emit_graph, parse_graph
from wellcovered.core.graph import Graph
from wellcovered.report import CERTIFIABLE, PROPERTIES, analyze, certify, load_schema

DOCS_SCHEMA = Path(__file__).resolve().parents[1] / "docs" / "report.schema.json"


def write_graph(tmp_path, name, G, fmt="graph6"):
    p = tmp_path / name
    data = emit_graph(G, fmt)
    p.write_bytes(data + (b"\n" if fmt == "graph6" else b""))
    return str(p)


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "wellcovered", *args], capture_output=True, text=True, timeout=300)


# -- reports -----------------------------------------------------------------------

def test_shipped_schema_matches_docs():
    assert load_schema() == json.loads(DOCS_SCHEMA.read_text())


@pytest.mark.parametrize("G", [cycle(4), cycle(5), cycle(6), path(4), Graph(0), Graph(3), whisker_of(cycle(3)), clique_sum(5, 5, 2)])
def test_reports_validate_against_schema(G):
    schema = load_schema()
    for witness in (True, False):
        jsonschema.validate(analyze(G, witness=witness), schema)


def test_report_determinism():
    G = clique_sum(3, 5, 2)
    a, b = analyze(G), analyze(G)
    a.pop("timing")
    b.pop("timing")
    assert json.dumps(a) == json.dumps(b)


def test_every_yes_in_a_report_certifies():
    for G in (cycle(5), path(4), whisker_of(cycle(4)), clique_sum(3, 6, 2), Graph(2)):
        rep = analyze(G)
        for prop in CERTIFIABLE:
            body = rep["properties"][prop]
            if body["status"] == "yes":
                assert certify(G, prop, json.loads(json.dumps(body["witness"]))), (G, prop)


def test_certify_rejects_tampered_witnesses():
    G = path(4)
    rep = analyze(G)
    wc = rep["properties"]["well_covered"]["witness"]
    assert not certify(G, "well_covered", wc[:-1])
    k = rep["properties"]["konig"]["witness"]
    assert not certify(G, "konig", {"matching": k["matching"][:1], "cover": k["cover"]})
    assert not certify(G, "konig", {"matching": [[0, 2]], "cover": [0]})
    assert not certify(G, "vd", {"leaf": [0, 1, 2, 3]})
    assert not certify(G, "shellable", [[0, 2], [1, 3], [0, 3]])
    assert not certify(G, "shellable", [[0, 2]])
    assert not certify(G, "perfect_konig_matching", "nonsense")
    with pytest.raises(ValueError):
        certify(G, "cm", None)


def test_analyze_examples():
    rep = analyze(cycle(5))
    status = {p: b["status"] for p, b in rep["properties"].items()}
    assert status["well_covered"] == status["vd"] == status["shellable"] == status["cm"] == "yes"
    rep = analyze(cycle(4))
    status = {p: b["status"] for p, b in rep["properties"].items()}
    assert (status["well_covered"], status["vd"], status["cm"]) == ("yes", "no", "no")
    assert set(rep["properties"]) == set(PROPERTIES)
    with pytest.raises(ValueError):
        analyze(cycle(4), ["bogus"])


# -- CLI: analyze ------------------------------------------------------------------

def test_cli_analyze_json_and_text(tmp_path, capsys):
    f = write_graph(tmp_path, "c5.g6", cycle(5))
    assert main(["analyze", f, "--properties", "vd,shellable", "--witness"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert set(rep["properties"]) == {"vd", "shellable"}
    assert "witness" in rep["properties"]["vd"]
    assert main(["analyze", f, "--format", "text"]) == 0
    assert "well_covered" in capsys.readouterr().out


def test_cli_analyze_errors(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("not a graph\n")
    assert main(["analyze", str(bad)]) == 2
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2
    f = write_graph(tmp_path, "p.txt", path(3), "edgelist")
    assert main(["analyze", f, "--properties", "nope"]) == 2
    assert main(["analyze"]) == 2


# -- CLI: certify ------------------------------------------------------------------

def test_cli_certify_path_shelling(tmp_path):
    f = write_graph(tmp_path, "p4.txt", path(4), "edgelist")
    good = tmp_path / "good.json"
    good.write_text(json.dumps([[0, 2], [0, 3], [1, 3]]))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[0, 2], [1, 3], [0, 3]]))
    assert main(["certify", f, "--property", "shellable", "--witness-file", str(good)]) == 0
    assert main(["certify", f, "--property", "shellable", "--witness-file", str(bad)]) == 1
    assert main(["certify", f, "--property", "shellable", "--witness-file", str(tmp_path / "none.json")]) == 2
    assert main(["certify", f, "--property", "cm", "--witness-file", str(good)]) == 2


def test_cli_certify_report_without_witness(tmp_path, capsys):
    f = write_graph(tmp_path, "c5.g6", cycle(5))
    assert main(["analyze", f]) == 0
    rep = tmp_path / "r.json"
    rep.write_text(capsys.readouterr().out)
    assert main(["certify", f, "--property", "vd", "--witness-file", str(rep)]) == 2


def test_cli_round_trip_subprocess(tmp_path):
    for i, G in enumerate((cycle(5), path(4), whisker_of(cycle(3)), clique_sum(3, 4, 2))):
        f = write_graph(tmp_path, f"g{i}.g6", G)
        out = run_cli("analyze", f, "--witness")
        assert out.returncode == 0, out.stderr
        rep_file = tmp_path / f"r{i}.json"
        rep_file.write_text(out.stdout)
        rep = json.loads(out.stdout)
        for prop in CERTIFIABLE:
            if rep["properties"][prop]["status"] == "yes":
                res = run_cli("certify", f, "--property", prop, "--witness-file", str(rep_file))
                assert res.returncode == 0, (prop, res.stdout, res.stderr)


# -- CLI: sweep --------------------------------------------------------------------

def test_cli_sweep_examples(capsys):
    assert main(["sweep", "--n", "5", "--filter", "no-3-5-7-cycles", "--check", "theorem24"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["checked"] == s["passed"] > 0
    assert main(["sweep", "--n", "6", "--check", "shedding-lemma4"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["checked"] == s["passed"] == sum(2 ** (k * (k - 1) // 2) for k in range(1, 7))
    assert main(["sweep", "--n", "99", "--check", "theorem24"]) == 2
    assert main(["sweep", "--n", "4", "--check", "no-such-check"]) == 2
    assert main(["sweep", "--n", "4", "--check", "theorem24", "--filter", "odd"]) == 2


def test_cli_sweep_sampled_and_jobs(capsys):
    assert main(["sweep", "--n", "9", "--only-n", "--samples", "20", "--seed", "5", "--check", "closure"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["mode"] == "sampled" and s["checked"] == 20
    assert main(["sweep", "--n", "5", "--check", "vd-componentwise", "--jobs", "2"]) == 0
    par = json.loads(capsys.readouterr().out)
    assert main(["sweep", "--n", "5", "--check", "vd-componentwise"]) == 0
    seq = json.loads(capsys.readouterr().out)
    assert par == seq and seq["witnesses_verified"] > 0


def test_cli_sweep_writes_counterexample(tmp_path, capsys, monkeypatch):
    from wellcovered import checks

    bogus = checks.Check("always-fails", "test double", lambda G, tally: {"forced": True} if G.n == 3 else None)
    monkeypatch.setitem(checks.CHECKS, bogus.name, bogus)
    out = tmp_path / "cx.json"
    assert main(["sweep", "--n", "3", "--check", "always-fails", "--out", str(out)]) == 4
    dump = json.loads(out.read_text())
    assert dump["graph"]["n"] == 3 and dump["mismatch"] == {"forced": True}
    assert parse_graph(dump["graph6"], "graph6").n == 3


def test_cli_lists_checks(capsys):
    assert main(["checks"]) == 0
    assert "shedding-criterion" in capsys.readouterr().out


# -- CLI: family -------------------------------------------------------------------

def test_cli_family(tmp_path, capsys):
    out = tmp_path / "c7.g6"
    assert main(["family", "cycle", "7", "--out", str(out)]) == 0
    assert parse_graph(out.read_bytes(), "graph6") == cycle(7)
    assert main(["family", "whisker", "--of", "cycle", "5"]) == 0
    assert parse_graph(capsys.readouterr().out, "edgelist") == whisker_of(cycle(5))
    assert main(["family", "clique-sum", "--a", "5", "--b", "5", "--k", "2"]) == 0
    assert parse_graph(capsys.readouterr().out, "edgelist") == clique_sum(5, 5, 2)
    assert main(["family", "cycle", "2"]) == 2
    assert main(["family", "cycle", "x"]) == 2
    assert main(["family", "clique-sum", "--a", "5"]) == 2
    assert main(["family", "whisker"]) == 2

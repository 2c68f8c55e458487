from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wellcovered.core.graph import Graph  # noqa: E402

# a=0, b=1, c=2, d=3, e=4, f=5, g=6, h=7, i=8
FIG9_EDGES = [(0, 1), (1, 2), (1, 7), (2, 3), (2, 8), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]


@pytest.fixture
def fig9() -> Graph:
    return Graph.from_edges(9, FIG9_EDGES)


def graph(n, edges) -> Graph:
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py" not in getattr(rep, "nodeid", "") or rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" not in props:
                continue
            verdict = "PASS" if rep.passed else "FAIL"
            lines.append((props["criterion"], f"[{verdict}] {props['criterion']:>2}. {props.get('title', '')} :: {props.get('detail', '')}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines, key=lambda t: t[0]):
            terminalreporter.write_line(line)

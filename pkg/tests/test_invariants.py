"""Exhaustive sweeps of every registered equivalence check.

Checks that the acceptance suite already runs at its own bounds are skipped
here; the rest run over all labeled graphs up to the bound listed below.
"""

from __future__ import annotations

import pytest

from wellcovered.checks import ALIASES, CHECKS, WitnessTally, resolve_check
from wellcovered.core.enumerate import enumerate_labeled_graphs

COVERED_BY_ACCEPTANCE = {
    "shedding-criterion",
    "shedding-candidates",
    "exchange-matching",
    "square-free-matching",
    "konig-conditions",
    "twin-leaves",
    "c-minor-closure",
    "unicyclic",
}

# statements about sparse graph classes are swept one size further
SEVEN = {
    "odd-cycle-free-konig",
    "vd-has-leaf",
    "two-connected-not-vd",
    "bipartite-shellable-leaf",
    "block-property-leaf",
    "cm-extendable-leaf",
    "seven-cycle-minor",
}


def run(check, graphs):
    tally = WitnessTally()
    checked = 0
    for G in graphs:
        checked += 1
        m = check.run(G, tally)
        assert m is None, (G, m)
    assert tally.failed == 0, tally.failures[:3]
    return checked, tally


@pytest.mark.parametrize("name", sorted(set(CHECKS) - COVERED_BY_ACCEPTANCE))
def test_check_holds_exhaustively(name):
    check = CHECKS[name]
    bound = 7 if name in SEVEN else 6
    graphs = (G for n in range(1, bound + 1) for G in enumerate_labeled_graphs(n, check.default_filter))
    checked, _ = run(check, graphs)
    assert checked > 0


def test_seven_cycle_minor_sampled_at_nine():
    check = CHECKS["seven-cycle-minor"]
    checked, _ = run(check, enumerate_labeled_graphs(9, "no-3-5-cycles", samples=150, seed=11, p=0.3))
    assert checked == 150


def test_aliases_resolve():
    for alias, target in ALIASES.items():
        assert resolve_check(alias) is CHECKS[target]
    with pytest.raises(KeyError):
        resolve_check("nope")

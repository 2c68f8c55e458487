from __future__ import annotations

import pytest

from oracles import order_is_shelling, shellable_by_permutation
from wellcovered.core.bits import mask_of
from wellcovered.core.enumerate import enumerate_labeled_graphs
from wellcovered.core.families import add_pendants, cycle, path, star
from wellcovered.core.graph import Graph
from wellcovered.decomposition import basic_5_cycles, is_shedding, vertex_decomposable
from wellcovered.errors import NotAPermutation, PreconditionViolated
from wellcovered.independence import maximal_stable_sets
from wellcovered.shelling import (
    CAP_ENV,
    DEFAULT_FACET_CAP,
    assemble_from_shedding,
    facet_cap,
    is_pure,
    shellable,
    shellable_girth11,
    shellable_via_basic5,
    verify_shelling,
)


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


def test_path_shelling_in_order():
    # path x2-x3-x4-x5 relabelled 0-1-2-3
    G = path(4)
    order = [mask_of([0, 2]), mask_of([0, 3]), mask_of([1, 3])]
    assert verify_shelling(maximal_stable_sets(G), order)
    assert not verify_shelling(maximal_stable_sets(G), [order[0], order[2], order[1]])


def test_verify_shelling_edge_cases():
    assert verify_shelling([0b1], [0b1])
    C4 = maximal_stable_sets(cycle(4))
    assert not verify_shelling(C4, [0b0101, 0b1010])
    assert not verify_shelling(C4, [0b1010, 0b0101])
    with pytest.raises(NotAPermutation):
        verify_shelling(C4, [0b0101])
    with pytest.raises(NotAPermutation):
        verify_shelling(C4, [0b0101, 0b0101])


@pytest.mark.parametrize("n", range(3, 12))
def test_cycles(n):
    v = shellable(cycle(n), cap=64)
    assert v.is_yes == (n in (3, 5))
    if v.is_yes:
        assert verify_shelling(maximal_stable_sets(cycle(n)), v.witness)


def test_examples():
    assert shellable(cycle(4)).is_no
    v = shellable(path(4))
    assert v.is_yes and vertex_decomposable(path(4)).is_yes


def test_search_matches_permutation_oracle():
    checked = 0
    for G in small_graphs(6):
        fs = maximal_stable_sets(G)
        if len(fs) > 6:
            continue
        v = shellable(G)
        assert v.is_yes == shellable_by_permutation(G), G
        if v.is_yes:
            assert order_is_shelling([set(f) for f in v.witness.as_lists()])
        checked += 1
    assert checked > 20000


def test_facet_cap(monkeypatch):
    assert facet_cap() == DEFAULT_FACET_CAP
    monkeypatch.setenv(CAP_ENV, "3")
    assert facet_cap() == 3
    assert shellable(cycle(7)).is_unknown
    assert facet_cap(50) == 50
    monkeypatch.setenv(CAP_ENV, "junk")
    assert facet_cap() == DEFAULT_FACET_CAP


def test_is_pure():
    assert is_pure(maximal_stable_sets(cycle(5)))
    assert not is_pure(maximal_stable_sets(cycle(6)))
    assert is_pure(maximal_stable_sets(Graph(1)))


def test_assembly_from_shedding_vertex():
    for G in small_graphs(6):
        for v in range(G.n):
            if not is_shedding(G, v):
                continue
            d = shellable(G.without(1 << v), 64)
            l = shellable(G.without(G.closed(v)), 64)
            if not (d.is_yes and l.is_yes):
                continue
            # lift the sub-orders back to G's labels before concatenating
            H1, H2 = G.without(1 << v), G.without(G.closed(v))
            lift = lambda H, F: mask_of(H.labels[i] for i in range(H.n) if F >> i & 1)  # noqa: E731
            order = assemble_from_shedding(v, [lift(H1, F) for F in d.witness.order], [lift(H2, F) for F in l.witness.order])
            assert verify_shelling(maximal_stable_sets(G), order)
            break


# -- fast paths ---------------------------------------------------------------------

def _two_fives_at_a_vertex():
    return Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)])


def test_basic5_examples():
    assert shellable_via_basic5(cycle(5)).is_yes
    G = add_pendants(cycle(5), [0])
    assert shellable_via_basic5(G).is_yes == shellable(G).is_yes == True  # noqa: E712
    H = _two_fives_at_a_vertex()
    assert shellable_via_basic5(H, cap=64).is_yes == shellable(H, cap=64).is_yes
    with pytest.raises(PreconditionViolated):
        shellable_via_basic5(cycle(4))


def test_basic5_agrees_with_search():
    n_checked = 0
    for G in small_graphs(6):
        if not G.is_connected() or not basic_5_cycles(G):
            continue
        v = shellable_via_basic5(G, cap=64)
        assert v.is_yes == shellable(G, cap=64).is_yes
        if v.is_yes:
            assert verify_shelling(maximal_stable_sets(G), v.witness)
        n_checked += 1
    assert n_checked > 0


def test_girth11_examples():
    assert shellable_girth11(cycle(11)).is_no
    assert shellable_girth11(star(4)).is_yes
    G = add_pendants(cycle(11), [0])
    v = shellable_girth11(G)
    assert v.is_yes == shellable(G, cap=256).is_yes
    assert verify_shelling(maximal_stable_sets(G), v.witness)
    with pytest.raises(PreconditionViolated):
        shellable_girth11(cycle(10))


def test_girth11_agrees_on_forests_and_long_cycles():
    for G in small_graphs(6):
        if G.m >= G.n:
            continue
        try:
            v = shellable_girth11(G)
        except PreconditionViolated:
            continue
        assert v.is_yes == shellable(G, cap=64).is_yes
    for at in ([0], [0, 1], [0, 2], [0, 5], [0, 1, 2, 3]):
        G = add_pendants(cycle(11), at)
        v = shellable_girth11(G)
        s = shellable(G, cap=512)
        assert not s.is_unknown and v.is_yes == s.is_yes

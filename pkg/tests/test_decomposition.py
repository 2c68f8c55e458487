from __future__ import annotations

import pytest

from oracles import shedding_by_definition
from oracles import vertex_decomposable as brute_vd
from wellcovered.core.bits import mask_of
from wellcovered.core.enumerate import enumerate_labeled_graphs
from wellcovered.core.families import clique_sum, complete, cycle, path, star, whisker_of
from wellcovered.core.graph import Graph
from wellcovered.decomposition import (
    Leaf,
    Shed,
    basic_4_cycles,
    basic_5_cycles,
    free_vertex_vd_step,
    is_shedding,
    is_simplicial,
    is_whisker_graph,
    pendant_matching,
    shedding_candidates,
    sqc_partition,
    structure_tags,
    tree_from_json,
    tree_to_json,
    verify_decomposition_tree,
    vertex_decomposable,
)
from wellcovered.errors import PreconditionViolated


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


# -- shedding ----------------------------------------------------------------------

def test_shedding_examples():
    assert all(is_shedding(cycle(5), v) for v in range(5))
    assert is_shedding(path(3), 1)
    assert not any(is_shedding(cycle(4), v) for v in range(4))
    for method in ("criterion", "definition"):
        assert not is_shedding(Graph(1), 0, method)
    with pytest.raises(ValueError):
        is_shedding(path(3), 0, "guess")


def test_domination_makes_shedding():
    # N[u] inside N[w] forces w to shed
    for G in small_graphs(5):
        for w in range(G.n):
            for u in range(G.n):
                if u != w and G.has_edge(u, w) and not G.closed(u) & ~G.closed(w):
                    assert is_shedding(G, w)


def test_both_shedding_tests_match_oracle():
    for G in small_graphs(5):
        for v in range(G.n):
            expected = shedding_by_definition(G, v)
            assert is_shedding(G, v, "criterion") == expected
            assert is_shedding(G, v, "definition") == expected


def test_candidate_examples():
    assert shedding_candidates(cycle(4)) == 0
    assert shedding_candidates(cycle(5)) == 0b11111
    assert shedding_candidates(path(4)) == 0b0110


# -- structure tags ----------------------------------------------------------------

def test_structure_tags_examples():
    t = structure_tags(path(4))
    assert t.is_whisker and t.simplicial == 0b1001 and t.free == 0b1001
    assert is_whisker_graph(whisker_of(cycle(5)))
    t = structure_tags(cycle(5))
    assert t.basic5cycles == ((0, 1, 2, 3, 4),)
    part = t.sqc_partition
    assert (part.simplex_part, part.square_part, part.cycle_part) == (0, 0, 0b11111)


def test_simplicial_and_pendants():
    assert is_simplicial(Graph(1), 0)
    assert all(is_simplicial(complete(4), v) for v in range(4))
    assert not is_simplicial(path(3), 1)
    assert pendant_matching(path(2)) == [(1, 0)]  # (support, leaf)
    assert pendant_matching(star(3)) is None
    assert is_whisker_graph(Graph(0))
    assert not is_whisker_graph(cycle(4))


def test_basic_cycles():
    # two 5-cycles sharing one vertex: that vertex has degree 4, its cycle neighbours degree 2
    G = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
    assert len(basic_5_cycles(G)) == 2
    # a 5-cycle with pendants at two adjacent vertices is not basic
    H = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6)])
    assert basic_5_cycles(H) == []
    # C4 hanging off a triangle: a, b of degree 2 opposite the triangle edge
    Q = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 2)])
    assert (3, 4, 1, 2) in basic_4_cycles(Q) or (3, 4, 2, 1) in basic_4_cycles(Q)


def test_sqc_partitions_are_partitions():
    for G in small_graphs(6):
        part = sqc_partition(G)
        if part is None:
            continue
        assert part.simplex_part | part.square_part | part.cycle_part == G.vertices
        assert not part.simplex_part & part.square_part
        covered = 0
        for c in part.cycles:
            m = mask_of(c)
            assert not covered & m
            covered |= m
        assert covered == part.cycle_part


# -- vertex decomposability --------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 10))
def test_cycles(n):
    assert vertex_decomposable(cycle(n)).is_yes == (n in (3, 5))


def test_chordal_example():
    K4_minus_edge = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    v = vertex_decomposable(K4_minus_edge)
    assert v.is_yes and verify_decomposition_tree(K4_minus_edge, v.witness)


@pytest.mark.parametrize("r1,r2", [(a, b) for a in range(3, 8) for b in range(a, 8)])
def test_clique_sums(r1, r2):
    assert vertex_decomposable(clique_sum(r1, r2, 2)).is_yes == (r1 == 3 or r1 == r2 == 5)


def test_vd_matches_definitional_oracle():
    for G in small_graphs(5):
        v = vertex_decomposable(G)
        assert v.is_yes == brute_vd(G), G
        if v.is_yes:
            assert verify_decomposition_tree(G, v.witness)


def test_componentwise_matches_direct_search():
    for G in small_graphs(5):
        assert vertex_decomposable(G).is_yes == vertex_decomposable(G, componentwise=False).is_yes


def test_tree_json_round_trip_and_tampering():
    G = path(4)
    tree = vertex_decomposable(G).witness
    assert tree_from_json(tree_to_json(tree)) == tree
    assert verify_decomposition_tree(G, tree)
    assert not verify_decomposition_tree(G, Leaf(G.vertices))
    assert not verify_decomposition_tree(cycle(4), Shed(0, Leaf(0b1110), Leaf(0b0100)))
    assert not verify_decomposition_tree(G, Shed(9, Leaf(0), Leaf(0)))
    with pytest.raises(ValueError):
        tree_from_json([1, 2])


def test_free_vertex_step_examples():
    assert free_vertex_vd_step(path(4), 0).is_yes
    assert free_vertex_vd_step(star(3), 1).is_yes
    # C4 with a pendant at 0: the pendant's neighbour sheds, both branches are VD
    G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    v = free_vertex_vd_step(G, 4)
    assert v.is_yes == vertex_decomposable(G).is_yes
    assert v.is_yes and verify_decomposition_tree(G, v.witness)
    with pytest.raises(PreconditionViolated):
        free_vertex_vd_step(path(3), 1)
    with pytest.raises(PreconditionViolated):
        free_vertex_vd_step(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), 3)


def test_free_vertex_step_agrees_with_search():
    for G in small_graphs(6):
        if len(G.components()) != 1:
            continue
        leaves = [x for x in range(G.n) if G.degree(x) == 1]
        if not leaves:
            continue
        try:
            v = free_vertex_vd_step(G, leaves[0])
        except PreconditionViolated:
            continue
        assert v.is_yes == vertex_decomposable(G).is_yes
        if v.is_yes:
            assert verify_decomposition_tree(G, v.witness)

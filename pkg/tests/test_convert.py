from collections import Counter
from fractions import Fraction as Fr

import pytest
from conftest import e1, e2, families
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_cover import (
    TO_GRAPH,
    TO_HYPERGRAPH,
    BlockedBipartiteGraph,
    Chain,
    InstanceFamily,
    WeightedHypergraph,
    build_chain,
    coverage_trace,
    family_to_graph,
    graph_to_family,
    map_chain,
    w_star,
)
from balanced_cover.errors import UniformityError


def test_graph_to_family_examples():
    G1 = BlockedBipartiteGraph(2, 1, 2, 1, [(1, [1]), (1, [2])])
    F = graph_to_family(G1)
    assert dict(F[0].edges) == {(1,): Fr(1, 2), (2,): Fr(1, 2)}
    G = BlockedBipartiteGraph(2, 1, 2, 2, [(1, [1, 2]), (1, [2, 1])])
    assert dict(graph_to_family(G)[0].edges) == {(1, 2): 1}


def test_family_to_graph_e1():
    G = family_to_graph(e1())
    assert G.m == 10 and G.k == 2 and G.r == 1
    counts = Counter(nb for b, nb in G.right_vertices if b == 1)
    assert counts == {(1,): 4, (2,): 1, (3,): 1, (4,): 4}
    assert graph_to_family(G) == e1()


def test_family_to_graph_e2_and_trivial():
    G = family_to_graph(e2())
    assert G.m == 10
    counts = Counter(nb for b, nb in G.right_vertices if b == 1)
    assert counts == {(1, 2): 3, (3, 4): 3, (1, 3): 2, (2, 4): 2}
    single = InstanceFamily([WeightedHypergraph(1, {(1,): 1})])
    G = family_to_graph(single)
    assert G.m == 1 and G.right_vertices == ((1, (1,)),)
    assert family_to_graph(e1(), scale=3).m == 30


def test_family_to_graph_needs_uniform():
    mixed = InstanceFamily([WeightedHypergraph(2, {(1,): 1}), WeightedHypergraph(2, {(1, 2): 1})])
    with pytest.raises(UniformityError):
        family_to_graph(mixed)


def test_map_chain_examples():
    assert map_chain(Chain((4, 3, 2, 1)), TO_GRAPH).order == (1, 2, 3, 4)
    ch = Chain((3, 1, 4, 2))
    assert map_chain(map_chain(ch, TO_GRAPH), TO_HYPERGRAPH) == ch
    assert map_chain(Chain((1,))) == Chain((1,))


def test_coverage_trace_e1():
    G = family_to_graph(e1())
    assert coverage_trace(G, Chain((1, 2, 3, 4))) == [(4, 1), (5, 5), (6, 9), (10, 10)]


@settings(max_examples=40, deadline=None)
@given(families(max_n=6, max_k=3), st.integers(1, 3))
def test_round_trip_and_coverage_identity(F, scale):
    G = family_to_graph(F, scale=scale)
    assert graph_to_family(G) == F
    S_chain = build_chain(F, "greedy")
    A_chain = map_chain(S_chain, TO_GRAPH)
    cov = coverage_trace(G, A_chain)
    n = F.n
    for j in range(1, n + 1):
        S = S_chain.prefix(n - j)
        for i, h in enumerate(F):
            assert cov[j - 1][i] == G.m * (1 - w_star(h, S))

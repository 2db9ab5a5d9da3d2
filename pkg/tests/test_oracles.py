from fractions import Fraction as Fr
from itertools import permutations

import pytest
from conftest import e1, families, subsets_of, zero_sum_vectors
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_cover import (
    InstanceFamily,
    VectorFamily,
    WeightedHypergraph,
    build_chain_greedy,
    cover_slack,
    gen_hadamard_vectors,
    lemma_check,
    min_ordering_prefix_norm,
    optimal_chain,
    optimal_partition,
    prefix_norms,
    unbalance,
)
from balanced_cover.errors import SizeError


def _naive_chain_value(F):
    return min(
        max(unbalance(F, order[:j]) for j in range(1, F.n + 1))
        for order in permutations(range(1, F.n + 1))
    )


def _naive_ordering_value(V):
    return min(max(prefix_norms(V, order)) for order in permutations(range(len(V))))


def test_optimal_chain_e1():
    chain, value = optimal_chain(e1())
    assert value == Fr(3, 10)
    assert chain.max_unbalance == value
    assert value <= build_chain_greedy(e1()).max_unbalance


def test_optimal_chain_identical():
    h = WeightedHypergraph(3, {(1, 2): Fr(1, 2), (2, 3): Fr(1, 2)})
    assert optimal_chain(InstanceFamily([h, h]))[1] == 0


def test_optimal_partition_examples():
    res, value = optimal_partition(e1())
    assert value == 0 and res.S == {1, 2}
    res, value = optimal_partition(InstanceFamily([WeightedHypergraph(1, {(1,): 1})]))
    assert value == 1 and res.S == {1} and res.T == frozenset()


def test_ordering_oracle_examples():
    assert min_ordering_prefix_norm(VectorFamily.of([(1,), (-1,)]))[0] == 1
    assert min_ordering_prefix_norm(gen_hadamard_vectors(2))[0] == 1
    assert min_ordering_prefix_norm(gen_hadamard_vectors(4))[0] >= 1


def test_caps():
    big = InstanceFamily.from_vertex_weights([[Fr(1, 23)] * 23] * 2)
    with pytest.raises(SizeError):
        optimal_chain(big)
    with pytest.raises(SizeError):
        optimal_partition(big)
    with pytest.raises(SizeError):
        min_ordering_prefix_norm(VectorFamily.of([(0,)] * 11))


def test_lemma_examples():
    rep = lemma_check(e1(), {1, 2, 3, 4})
    assert rep.lhs == Fr(9, 100) and rep.rhs == Fr(1, 5) and rep.holds
    rep = lemma_check(e1(), {1, 2})
    assert rep.holds and rep.x_holds
    h = WeightedHypergraph(3, {(1,): Fr(1, 3), (2,): Fr(1, 3), (3,): Fr(1, 3)})
    rep = lemma_check(InstanceFamily([h, h]), {2, 3})
    assert rep.lhs == 0 and rep.holds


@settings(max_examples=30, deadline=None)
@given(families(max_n=5, max_k=3, min_k=2, uniform=False))
def test_optimal_chain_matches_permutation_scan(F):
    chain, value = optimal_chain(F)
    assert value == _naive_chain_value(F)
    assert max(unbalance(F, chain.order[:j]) for j in range(1, F.n + 1)) == value


@settings(max_examples=40, deadline=None)
@given(families(max_n=7, max_k=3, min_k=2))
def test_optimal_chain_under_theorem_bound(F):
    _, value = optimal_chain(F)
    assert value * value <= 2 * (F.k - 1) * cover_slack(F)
    assert value <= build_chain_greedy(F).max_unbalance


@settings(max_examples=30, deadline=None)
@given(zero_sum_vectors(max_n=6, max_d=2))
def test_ordering_oracle_matches_permutation_scan(V):
    value, order = min_ordering_prefix_norm(V)
    assert value == _naive_ordering_value(V)
    assert max(prefix_norms(V, order)) == value


@settings(max_examples=80, deadline=None)
@given(families(max_n=8, max_k=4, min_k=2), st.data())
def test_lemma_property(F, data):
    S = data.draw(subsets_of(F.n, nonempty=True))
    rep = lemma_check(F, S)
    assert rep.holds and rep.x_holds


@settings(max_examples=30, deadline=None)
@given(families(max_n=6, max_k=3), st.integers(2, 5))
def test_partition_value_scale_free(F, scale):
    """Duplicating every hypergraph leaves the optimal partition value unchanged."""
    G = InstanceFamily(list(F) * scale)
    assert optimal_partition(G)[1] == optimal_partition(F)[1]

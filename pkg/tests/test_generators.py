from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_cover import (
    InstanceFamily,
    SplitMix64,
    VectorFamily,
    cover_slack,
    gen_almost_regular,
    gen_hadamard_vectors,
    gen_mixed_family,
    gen_random_family,
    gen_zero_sum_vectors,
    sylvester,
    vectors_to_family,
)
from balanced_cover.errors import InfeasibleError, ParameterError, ReductionError


def test_random_family_forced_case():
    F = gen_random_family(1, 1, 1, 1, seed=0)
    assert dict(F[0].edges) == {(1,): 1}


def test_random_family_slack_and_determinism():
    F = gen_random_family(10, 3, 2, Fr(1, 4), seed=7)
    assert F.n == 10 and F.k == 3 and F.r == 2
    assert cover_slack(F) <= Fr(1, 4)
    assert gen_random_family(10, 3, 2, Fr(1, 4), seed=7) == F
    assert gen_random_family(10, 3, 2, Fr(1, 4), seed=8) != F


def test_random_family_infeasible():
    with pytest.raises(InfeasibleError):
        gen_random_family(10, 2, 2, Fr(1, 10), seed=0)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 20), st.integers(1, 4), st.integers(1, 3), st.integers(0, 10**6), st.integers(1, 5))
def test_random_family_property(n, k, r, seed, slack_num):
    r = min(r, n)
    c = max(Fr(slack_num, 10), Fr(r, n))
    F = gen_random_family(n, k, r, c, seed)
    assert F.r == r and F.k == k
    assert cover_slack(F) <= c


def test_mixed_family():
    F = gen_mixed_family(8, 3, [1, 2, 3, 4], seed=5)
    assert F.n == 8 and F.k == 3
    sizes = {len(e) for h in F for e in h.edges}
    assert sizes <= {1, 2, 3, 4}
    assert gen_mixed_family(8, 3, [1, 2, 3, 4], seed=5) == F


def test_zero_sum_vectors():
    V = gen_zero_sum_vectors(12, 3, seed=1)
    assert len(V) == 12 and V.d == 3 and V.is_zero_sum()


def test_sylvester_orthogonal():
    for k in (1, 2, 4, 8):
        H = sylvester(k)
        for a in range(k):
            for b in range(k):
                assert sum(x * y for x, y in zip(H[a], H[b])) == (k if a == b else 0)
    with pytest.raises(ParameterError):
        sylvester(3)


def test_hadamard_vectors():
    assert gen_hadamard_vectors(1).vectors == ((1,), (-1,))
    assert gen_hadamard_vectors(2).vectors == ((1, 1), (1, -1), (-1, 0), (-1, 0))
    V = gen_hadamard_vectors(4)
    assert len(V) == 8 and V.is_zero_sum()


def test_vectors_to_family_example():
    V = VectorFamily.of([(Fr(1, 5),), (Fr(-1, 5),), (0,), (0,), (0,)])
    F = vectors_to_family(V, Fr(2, 5), Fr(1, 2))
    assert F.k == 2 and F.n == 5
    assert [F[1].edges[(j,)] for j in range(1, 6)] == [Fr(1, 5)] * 5
    assert [F[0].edges.get((j,), 0) for j in range(1, 6)] == [Fr(2, 5), 0, Fr(1, 5), Fr(1, 5), Fr(1, 5)]


def test_vectors_to_family_zero_and_errors():
    V = VectorFamily.of([(0, 0)] * 3)
    F = vectors_to_family(V, Fr(1, 4), Fr(1, 2))
    assert F.n == 8
    assert all(w == Fr(1, 8) for h in F for w in h.edges.values())
    with pytest.raises(ReductionError):
        vectors_to_family(VectorFamily.of([(1,), (-1,)]), Fr(1, 4), Fr(1, 2))
    with pytest.raises(ReductionError):
        vectors_to_family(VectorFamily.of([(1,), (1,)]), 10, Fr(1, 2))


def test_reduction_weight_bounds():
    V = gen_hadamard_vectors(2)
    W = V.scaled(Fr(1, 8))
    F = vectors_to_family(W, Fr(1, 4), Fr(1, 2))
    assert F.k == 3 and F.r == 1
    assert cover_slack(F) <= Fr(1, 4)


def test_almost_regular_parameter_errors():
    with pytest.raises(ParameterError, match="5/4"):
        gen_almost_regular(Fr(1, 5), Fr(1, 2), 4, 40, seed=0)
    with pytest.raises(ParameterError):
        gen_almost_regular(Fr(1, 8), 2, 4, 40, seed=0)


def test_almost_regular_small_and_deterministic():
    G, rep = gen_almost_regular(Fr(1, 8), Fr(1, 2), 4, 80, seed=1)
    G2, _ = gen_almost_regular(Fr(1, 8), Fr(1, 2), 4, 80, seed=1)
    assert G.right_vertices == G2.right_vertices
    assert G.n == 32 and G.m == 80
    assert rep.success and all(rep.bullets.values())


def test_splitmix_reference_values():
    # first outputs for seed 0 of the reference SplitMix64
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F,
    ]
    rng = SplitMix64(42)
    xs = [rng.randint(3, 5) for _ in range(200)]
    assert set(xs) == {3, 4, 5}

from fractions import Fraction as Fr

import pytest
from conftest import e1, families, zero_sum_vectors
from hypothesis import given, settings

from balanced_cover import (
    InstanceFamily,
    VectorFamily,
    family_to_vectors,
    min_ordering_prefix_norm,
    prefix_norms,
    steinitz_order,
    vectors_to_family,
)
from balanced_cover.errors import DimensionError, PreconditionError, UniformityError

PM_E = VectorFamily.of([(1, 0), (0, 1), (-1, 0), (0, -1)])


def test_alternating_scalars():
    V = VectorFamily.of([(1,), (-1,), (1,), (-1,)])
    order = steinitz_order(V)
    assert sorted(order) == [0, 1, 2, 3]
    assert max(prefix_norms(V, order)) <= 1


def test_plus_minus_unit_vectors():
    order = steinitz_order(PM_E)
    assert max(prefix_norms(PM_E, order)) <= 2
    value, best = min_ordering_prefix_norm(PM_E)
    assert value == 1
    assert max(prefix_norms(PM_E, best)) == 1


def test_single_zero_vector():
    V = VectorFamily.of([(0, 0)])
    assert steinitz_order(V) == [0]
    assert prefix_norms(V, [0]) == [0]


def test_preconditions():
    with pytest.raises(PreconditionError):
        steinitz_order(VectorFamily.of([(1,), (1,)]))
    with pytest.raises(DimensionError):
        VectorFamily(2, ((1, 2), (3,)))
    with pytest.raises(DimensionError):
        VectorFamily(0, ())


def test_family_to_vectors_examples():
    V = family_to_vectors(e1())
    assert V.d == 1
    assert V.vectors == ((Fr(3, 10),), (Fr(-3, 10),), (Fr(-3, 10),), (Fr(3, 10),))
    assert V.is_zero_sum()
    uni = InstanceFamily.from_vertex_weights([[Fr(1, 4)] * 4] * 3)
    assert family_to_vectors(uni).vectors == ((0, 0),) * 4
    with pytest.raises(UniformityError):
        family_to_vectors(InstanceFamily.from_weights(2, [{(1, 2): 1}, {(1, 2): 1}]))


@settings(max_examples=60, deadline=None)
@given(zero_sum_vectors(max_n=9, max_d=3))
def test_steinitz_bound(V):
    order = steinitz_order(V)
    assert sorted(order) == list(range(len(V)))
    assert all(x <= V.d * V.max_norm for x in prefix_norms(V, order))
    if len(V) <= 7:
        value, _ = min_ordering_prefix_norm(V)
        assert value <= max(prefix_norms(V, order))


@settings(max_examples=40, deadline=None)
@given(families(max_n=6, max_k=3, min_k=2, max_r=1))
def test_reduction_inverse(F):
    """``family_to_vectors`` recovers the scaled input of ``vectors_to_family``."""
    V = family_to_vectors(F)
    c, theta = Fr(1, 2), Fr(1, 2)
    if V.max_norm == 0:
        return
    W = V.scaled(theta * c / V.max_norm)
    n_needed = 4  # ceil(1 / ((1 - theta) c))
    if any(x < -Fr(1, max(len(W), n_needed)) for v in W.vectors for x in v):
        return
    G = vectors_to_family(W, c, theta)
    back = family_to_vectors(G)
    assert back.vectors[: len(W)] == W.vectors
    assert all(x == 0 for v in back.vectors[len(W):] for x in v)

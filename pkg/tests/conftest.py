from __future__ import annotations

from fractions import Fraction as Fr
from itertools import combinations

import pytest
from hypothesis import strategies as st

from balanced_cover import InstanceFamily, VectorFamily


def e1() -> InstanceFamily:
    return InstanceFamily.from_vertex_weights([
        [Fr(2, 5), Fr(1, 10), Fr(1, 10), Fr(2, 5)],
        [Fr(1, 10), Fr(2, 5), Fr(2, 5), Fr(1, 10)],
    ])


def e2() -> InstanceFamily:
    w = {(1, 2): Fr(3, 10), (3, 4): Fr(3, 10), (1, 3): Fr(1, 5), (2, 4): Fr(1, 5)}
    return InstanceFamily.from_weights(4, [w, w])


@pytest.fixture
def E1():
    return e1()


@pytest.fixture
def E2():
    return e2()


def _normalise(n, raw):
    total = sum(w for _, w in raw)
    return {e: Fr(w, total) for e, w in raw}


@st.composite
def families(draw, max_n=6, max_k=3, uniform=True, max_r=3, min_k=1):
    """Small weighted hypergraph families with exact rational weights."""
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(min_k, max_k))
    if uniform:
        r = draw(st.integers(1, min(max_r, n)))
        pool = list(combinations(range(1, n + 1), r))
    else:
        pool = [e for s in range(1, min(max_r, n) + 1) for e in combinations(range(1, n + 1), s)]
    maps = []
    for _ in range(k):
        chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=min(len(pool), 8), unique=True))
        ws = draw(st.lists(st.integers(1, 9), min_size=len(chosen), max_size=len(chosen)))
        maps.append(_normalise(n, list(zip(chosen, ws))))
    return InstanceFamily.from_weights(n, maps)


@st.composite
def subsets_of(draw, n, nonempty=False):
    s = draw(st.sets(st.integers(1, n), min_size=1 if nonempty else 0, max_size=n))
    return frozenset(s)


@st.composite
def zero_sum_vectors(draw, max_n=7, max_d=3):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    rows = [
        tuple(Fr(draw(st.integers(-6, 6)), draw(st.integers(1, 4))) for _ in range(d))
        for _ in range(n - 1)
    ]
    last = tuple(-sum((r[i] for r in rows), Fr(0)) for i in range(d))
    return VectorFamily(d, tuple(rows) + (last,))

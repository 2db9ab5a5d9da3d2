"""Exact brute-force references.

These enumerate the whole subset lattice and never approximate. Exceeding
a size cap raises :class:`SizeError` instead of degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from .core import (
    Chain,
    InstanceFamily,
    cover_slack,
    phi,
    phi_norm_sq,
    subset_mask,
    unbalance_trace,
)
from .errors import PreconditionError, SizeError, UniformityError
from .partition import HEURISTIC, PartitionResult, partition_gaps
from .steinitz import VectorFamily
from .subsets import popcounts, w_star_table


def _unbalance_table(F: InstanceFamily) -> tuple[np.ndarray, int]:
    D = F.common_denominator()
    hi = lo = None
    for i in range(F.k):
        t = w_star_table(F, i, D)
        hi = t.copy() if hi is None else np.maximum(hi, t)
        lo = t.copy() if lo is None else np.minimum(lo, t)
    return hi - lo, D


def optimal_chain(F: InstanceFamily, n_cap: int = 22) -> tuple[Chain, Fraction]:
    """Chain minimising the worst prefix unbalance, by DP over all subsets.

    ``M(S)`` is the best achievable worst unbalance over chains passing
    through ``S``'s supersets: ``M([n]) = 0`` and
    ``M(S) = max(unb(S), min_{j not in S} M(S + j))``. The returned chain is
    the lexicographically smallest optimal one.
    """
    n = F.n
    if n > n_cap:
        raise SizeError(f"n = {n} exceeds the optimal_chain cap {n_cap}")
    unb, D = _unbalance_table(F)
    size = 1 << n
    full = size - 1
    pc = popcounts(n)
    M = unb.copy()
    M[full] = 0
    by_level = [np.nonzero(pc == p)[0] for p in range(n + 1)]
    inf = D + 1  # scaled unbalances never exceed D
    for p in range(n - 1, 0, -1):
        masks = by_level[p]
        best = np.full(len(masks), inf, dtype=M.dtype)
        for j in range(n):
            bit = 1 << j
            free = (masks & bit) == 0
            best[free] = np.minimum(best[free], M[masks[free] | bit])
        M[masks] = np.maximum(unb[masks], best)
    singles = [int(M[1 << j]) for j in range(n)]
    value_scaled = min(singles)
    order = []
    mask = 0
    for _ in range(n):
        for j in range(n):
            bit = 1 << j
            if not mask & bit and int(M[mask | bit]) <= value_scaled:
                order.append(j + 1)
                mask |= bit
                break
    chain = Chain(tuple(order), unbalance_trace(F, order))
    value = Fraction(value_scaled, D)
    if chain.max_unbalance != value:
        raise AssertionError("optimal chain reconstruction disagrees with the DP value")
    return chain, value


def optimal_partition(F: InstanceFamily, n_cap: int = 22) -> tuple[PartitionResult, Fraction]:
    """Smallest worst gap ``max_i |w_i*(S) - w_i*(T)|`` over all bipartitions.

    ``S`` always contains vertex 1; ties go to the smallest ``S`` mask.
    """
    n = F.n
    if n > n_cap:
        raise SizeError(f"n = {n} exceeds the optimal_partition cap {n_cap}")
    D = F.common_denominator()
    worst = None
    for i in range(F.k):
        t = w_star_table(F, i, D)
        g = np.abs(t - t[::-1])
        worst = g if worst is None else np.maximum(worst, g)
    odd = worst[1::2]  # masks containing vertex 1
    pos = int(np.argmin(odd))
    S_mask = 2 * pos + 1
    T_mask = ((1 << n) - 1) ^ S_mask
    S = frozenset(v for v in range(1, n + 1) if S_mask >> (v - 1) & 1)
    T = frozenset(v for v in range(1, n + 1) if T_mask >> (v - 1) & 1)
    gaps = partition_gaps(F, S, T)
    value = Fraction(int(odd[pos]), D)
    return PartitionResult(S, T, gaps, HEURISTIC, False), value


def min_ordering_prefix_norm(V: VectorFamily, n_cap: int = 10) -> tuple[Fraction, list[int]]:
    """Minimum over orderings of the largest prefix infinity norm.

    Memoised over the set of already-used vectors: the prefix sum only
    depends on that set. Equal vectors are tried once per level. Returns the
    value and one optimal 0-based ordering.
    """
    n = len(V)
    if n > n_cap:
        raise SizeError(f"{n} vectors exceed the ordering-oracle cap {n_cap}")
    if not V.is_zero_sum():
        raise PreconditionError("vectors must sum to zero")
    den = lcm(*(x.denominator for v in V.vectors for x in v))
    ints = [tuple(int(x * den) for x in v) for v in V.vectors]
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def sums(mask):
        if mask == 0:
            return (0,) * V.d
        low = (mask & -mask).bit_length() - 1
        prev = sums(mask & (mask - 1))
        return tuple(a + b for a, b in zip(prev, ints[low]))

    @lru_cache(maxsize=None)
    def best(mask):
        if mask == full:
            return 0, None
        result = None
        seen = set()
        for j in range(n):
            if mask >> j & 1 or ints[j] in seen:
                continue
            seen.add(ints[j])
            nxt = mask | (1 << j)
            here = max(abs(x) for x in sums(nxt))
            rest, _ = best(nxt)
            val = max(here, rest)
            if result is None or val < result[0]:
                result = (val, j)
        return result

    order, mask = [], 0
    value, _ = best(0)
    while mask != full:
        _, j = best(mask)
        order.append(j)
        mask |= 1 << j
    return Fraction(value, den), order


@dataclass(frozen=True)
class LemmaReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    x_norm_sq_sum: Fraction
    x_bound: Fraction
    x_holds: bool


def lemma_check(F: InstanceFamily, S) -> LemmaReport:
    """Average squared ``phi`` norm after one deletion versus its guaranteed ceiling.

    Also reports ``sum_j ||x_j||^2`` against ``2 r (k-1) c`` where
    ``x_j = phi(S) - phi(S - {j})``.
    """
    if F.r is None:
        raise UniformityError("lemma_check needs an r-uniform family")
    if F.k < 2:
        raise PreconditionError("lemma_check needs k >= 2")
    mask = subset_mask(F.n, S)
    members = [v for v in range(1, F.n + 1) if mask >> (v - 1) & 1]
    if not members:
        raise PreconditionError("S must be nonempty")
    c = cover_slack(F)
    s = len(members)
    base = phi(F, mask)
    norm = sum((x * x for x in base), Fraction(0))
    after = 0
    xsum = Fraction(0)
    for j in members:
        rest = mask & ~(1 << (j - 1))
        after += phi_norm_sq(F, rest)
        xj = [a - b for a, b in zip(base, phi(F, rest))]
        xsum += sum((x * x for x in xj), Fraction(0))
    lhs = Fraction(after) / s
    rhs = norm - Fraction(2 * F.r, s) * (norm - (F.k - 1) * c)
    xb = 2 * F.r * (F.k - 1) * c
    return LemmaReport(lhs, rhs, lhs <= rhs, xsum, xb, xsum <= xb)

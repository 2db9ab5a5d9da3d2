"""Balanced bipartitions ``[n] = S + T`` of a hypergraph family.

Two certified routes:

* :func:`partition_tucker` searches every subset for a Tucker witness pair
  ``(S0, T0)`` and returns ``(S0 + Z, T0)``, which has every gap at most ``2kc``.
* :func:`partition_pairwise` (edges of size 1 or 2) rounds an extreme point
  of ``{a in [-1,1]^n : sum a_j x_j = 0}`` and signs the few fractional
  coordinates by exhaustive search, giving gaps at most ``6 sqrt(k) c``.

Matrix-level helpers (:func:`extreme_point`, :func:`spencer_color`) use
0-based column indices; everything returning vertex sets uses labels ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .core import InstanceFamily, cover_slack, mask_members, subset_mask, w_star
from .errors import ArityError, InvariantViolation, SizeError
from .linalg import walk_to_vertex
from .rng import SplitMix64
from .subsets import popcounts, w_star_table

TUCKER = "tucker-2kc"
PAIRWISE = "pairwise-6sqrtk"
HEURISTIC = "heuristic"


@dataclass(frozen=True)
class PartitionResult:
    S: frozenset
    T: frozenset
    gaps: tuple[Fraction, ...]
    bound_kind: str
    certified: bool
    witness: tuple[frozenset, frozenset] | None = None

    @property
    def max_gap(self) -> Fraction:
        return max(self.gaps)


def partition_gaps(F: InstanceFamily, S, T) -> tuple[Fraction, ...]:
    return tuple(abs(w_star(h, S) - w_star(h, T)) for h in F)


def tucker_bound_holds(F: InstanceFamily, gaps) -> bool:
    bound = 2 * F.k * cover_slack(F)
    return all(g <= bound for g in gaps)


def pairwise_bound_holds(F: InstanceFamily, gaps) -> bool:
    c = cover_slack(F)
    return all(g * g <= 36 * F.k * c * c for g in gaps)


def _result(F, S_mask, T_mask, kind, witness=None, certify=None):
    S = frozenset(mask_members(S_mask))
    T = frozenset(mask_members(T_mask))
    gaps = partition_gaps(F, S, T)
    certified = certify(F, gaps) if certify else False
    return PartitionResult(S, T, gaps, kind, certified, witness)


def tucker_witness(F: InstanceFamily):
    """Best Tucker witness by exhaustive search, or ``None``.

    A subset ``U`` is *good* when ``w_i*(U) <= w_i*([n] - U)`` for every ``i``.
    A witness is a disjoint good pair with ``|S0| + |T0| >= n - k``. The
    largest good subset inside each mask comes from one superset-max pass,
    so the search costs ``O(2^n (n + k))``. Among witnesses the one whose
    partition ``(S0 + Z, T0)`` has the smallest worst gap is kept, ties to
    the smallest ``S0`` mask.
    """
    n, k = F.n, F.k
    D = F.common_denominator()
    tables = [w_star_table(F, i, D) for i in range(k)]
    size = 1 << n
    good = np.ones(size, dtype=bool)
    for t in tables:
        good &= t <= t[::-1]
    pc = popcounts(n)
    idx = np.arange(size, dtype=np.int64)
    best = np.where(good, pc, -1)
    arg = np.where(good, idx, -1)
    for b in range(n):
        bv = best.reshape(-1, 2, 1 << b)
        av = arg.reshape(-1, 2, 1 << b)
        take = bv[:, 0, :] > bv[:, 1, :]
        bv[:, 1, :] = np.where(take, bv[:, 0, :], bv[:, 1, :])
        av[:, 1, :] = np.where(take, av[:, 0, :], av[:, 1, :])
    best_in_comp = best[::-1]
    cand = np.nonzero(good & (best_in_comp >= n - k - pc))[0]
    if cand.size == 0:
        return None
    full = size - 1
    T0 = arg[::-1][cand]
    worst = None
    for t in tables:
        g = np.abs(t[full ^ T0] - t[T0])
        worst = g if worst is None else np.maximum(worst, g)
    pick = int(np.argmin(worst))
    return int(cand[pick]), int(T0[pick])


def partition_tucker(F: InstanceFamily, cap: int = 20, seed: int = 0) -> PartitionResult:
    n = F.n
    if n > cap:
        return partition_local_search(F, seed=seed)
    full = (1 << n) - 1
    found = tucker_witness(F)
    if found is None:
        # n < 2k: every partition already has gap <= 1 < 2kc, take the best one.
        from .oracles import optimal_partition

        res, _ = optimal_partition(F, n_cap=cap)
        return PartitionResult(res.S, res.T, res.gaps, TUCKER, tucker_bound_holds(F, res.gaps))
    S0, T0 = found
    witness = (frozenset(mask_members(S0)), frozenset(mask_members(T0)))
    res = _result(F, full ^ T0, T0, TUCKER, witness, tucker_bound_holds)
    if not res.certified:
        raise InvariantViolation(f"Tucker witness partition has gaps {res.gaps} above 2kc")
    return res


def partition_local_search(F: InstanceFamily, seed: int = 0, steps: int | None = None,
                           restarts: int = 4) -> PartitionResult:
    """Uncertified fallback: flips and swaps that never increase the worst gap."""
    n, k = F.n, F.k
    rng = SplitMix64(seed)
    steps = 64 * n * n if steps is None else steps
    rows, sizes, weights, groups = [], [], [], []
    for i, h in enumerate(F):
        for e, w in h.edges.items():
            row = np.zeros(n, dtype=np.int64)
            row[[v - 1 for v in e]] = 1
            rows.append(row)
            sizes.append(len(e))
            weights.append(float(w))
            groups.append(i)
    inc = np.array(rows)
    sizes = np.array(sizes)
    weights = np.array(weights)
    groups = np.array(groups)

    def worst(side):
        cnt = inc @ side
        ws = np.bincount(groups, weights * (cnt == sizes), minlength=k)
        wt = np.bincount(groups, weights * (cnt == 0), minlength=k)
        return float(np.max(np.abs(ws - wt)))

    best_side, best_val = None, None
    per_run = max(1, steps // restarts)
    for _ in range(restarts):
        side = np.array([rng.below(2) for _ in range(n)], dtype=np.int64)
        cur = worst(side)
        for step in range(per_run):
            trial = side.copy()
            if step % 2 == 0 or trial.sum() in (0, n):
                j = rng.below(n)
                trial[j] ^= 1
            else:
                ones = np.nonzero(trial)[0]
                zeros = np.nonzero(trial == 0)[0]
                trial[ones[rng.below(len(ones))]] = 0
                trial[zeros[rng.below(len(zeros))]] = 1
            val = worst(trial)
            if val <= cur:
                side, cur = trial, val
        if best_val is None or cur < best_val:
            best_side, best_val = side, cur
    S_mask = sum(1 << j for j in range(n) if best_side[j])
    return _result(F, S_mask, ((1 << n) - 1) ^ S_mask, HEURISTIC)


# -- pairwise route -------------------------------------------------------------


@dataclass(frozen=True)
class ExtremePoint:
    a: tuple[Fraction, ...]
    J: tuple[int, ...]  # 0-based columns with -1 < a_j < 1
    trivial: bool       # the polytope is {0}


def extreme_point(X) -> ExtremePoint:
    """Extreme point of ``{a in [-1,1]^n : X a = 0}`` reached from ``a = 0``.

    Each move follows a null vector of the still-free columns to the nearest
    facet, so the final free columns are linearly independent. If the
    columns of ``X`` are independent the polytope is ``{0}`` and ``a = 0``
    comes back flagged ``trivial``.
    """
    X = [[Fraction(x) for x in row] for row in X]
    n = len(X[0]) if X else 0
    nrows = len(X)
    cols = {j: tuple(X[r][j] for r in range(nrows)) for j in range(n)}
    if nrows == 0:
        cols = {j: (Fraction(0),) for j in range(n)}
    a = walk_to_vertex({j: Fraction(0) for j in range(n)}, cols, -1, 1, max(nrows, 1) + 1)
    vec = tuple(a[j] for j in range(n))
    J = tuple(j for j in range(n) if -1 < vec[j] < 1)
    return ExtremePoint(vec, J, n > 0 and all(x == 0 for x in vec))


def _int_scale(values) -> int:
    return lcm(*(Fraction(v).denominator for v in values)) if values else 1


def spencer_color(vectors, target=None, cap: int = 24):
    """Signs ``b`` minimising ``||sum b_j v_j - target||_inf`` by exhaustive search.

    Returns ``(signs, norm)``. Signings are scanned in lexicographic order
    with ``+1`` before ``-1`` (first vector most significant) and the first
    minimiser wins.
    """
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    p = len(vectors)
    if p > cap:
        raise SizeError(f"{p} vectors exceed the signing cap {cap}")
    if target is None:
        if not vectors:
            return (), Fraction(0)
        target = [Fraction(0)] * len(vectors[0])
    target = tuple(Fraction(x) for x in target)
    dim = len(target)
    if p == 0:
        return (), max((abs(t) for t in target), default=Fraction(0))
    D = _int_scale([x for v in vectors for x in v] + list(target))
    ints = [[int(x * D) for x in v] for v in vectors]
    tgt = [int(t * D) for t in target]
    peak = sum(max(abs(x) for x in v) for v in ints) + max(abs(t) for t in tgt)
    dtype = np.int64 if peak < (1 << 62) else object
    M = np.array(ints, dtype=dtype).reshape(p, dim)
    L = min(p, 16)
    H = p - L
    low_idx = np.arange(1 << L, dtype=np.int64)
    low_bits = (low_idx[:, None] >> np.arange(L - 1, -1, -1)) & 1
    low_signs = (1 - 2 * low_bits).astype(dtype)
    low_sum = low_signs @ M[H:]
    tvec = np.array(tgt, dtype=dtype)
    best_val, best_code = None, None
    for h in range(1 << H):
        base = -tvec
        for q in range(H):
            sgn = -1 if (h >> (H - 1 - q)) & 1 else 1
            base = base + sgn * M[q]
        norms = np.abs(low_sum + base).max(axis=1)
        pos = int(np.argmin(norms))
        val = norms[pos]
        if best_val is None or val < best_val:
            best_val, best_code = val, (h << L) | pos
    signs = tuple(-1 if (best_code >> (p - 1 - q)) & 1 else 1 for q in range(p))
    return signs, Fraction(int(best_val), D)


def pairwise_vectors(F: InstanceFamily) -> list[list[Fraction]]:
    """``X[i][j] = w_i({j}) + (1/2) * sum of w_i over pairs through j`` (vertex j = column j-1)."""
    X = []
    for h in F:
        row = [Fraction(0)] * F.n
        for e, w in h.edges.items():
            if len(e) == 1:
                row[e[0] - 1] += w
            elif len(e) == 2:
                row[e[0] - 1] += w / 2
                row[e[1] - 1] += w / 2
            else:
                raise ArityError(f"edge {e} has {len(e)} vertices; pairwise route needs at most 2")
        X.append(row)
    return X


def partition_pairwise(F: InstanceFamily, cap: int = 24) -> PartitionResult:
    n = F.n
    X = pairwise_vectors(F)
    cols = [[X[i][j] for i in range(F.k)] for j in range(n)]
    ep = extreme_point(X)
    if ep.trivial:
        J = tuple(range(n))
        base = [Fraction(0)] * n
    else:
        J, base = ep.J, list(ep.a)
    target = [sum((base[j] * cols[j][i] for j in J), Fraction(0)) for i in range(F.k)]
    signs, _ = spencer_color([cols[j] for j in J], target, cap=cap)
    xi = list(base)
    for j, b in zip(J, signs):
        xi[j] = Fraction(b)
    if any(abs(v) != 1 for v in xi):
        raise InvariantViolation("rounded coefficients are not all +-1")
    S_mask = subset_mask(n, [j + 1 for j in range(n) if xi[j] == 1])
    T_mask = ((1 << n) - 1) ^ S_mask
    res = _result(F, S_mask, T_mask, PAIRWISE, certify=pairwise_bound_holds)
    for i in range(F.k):
        signed = abs(sum((xi[j] * X[i][j] for j in range(n)), Fraction(0)))
        if signed != res.gaps[i]:
            raise InvariantViolation(f"gap {i + 1}: signed sum {signed} != w* gap {res.gaps[i]}")
    if not res.certified:
        raise InvariantViolation(f"pairwise partition gaps {res.gaps} exceed 6 sqrt(k) c")
    return res

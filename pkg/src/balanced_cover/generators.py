"""Instance generators. Every output is a pure function of the arguments and seed."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, floor, lcm

from .core import InstanceFamily, WeightedHypergraph, as_fraction, subset_mask
from .errors import GenerationFailure, InfeasibleError, ParameterError, ReductionError
from .rng import SplitMix64
from .steinitz import VectorFamily


# -- random valid families ------------------------------------------------------


def _random_edges(n: int, r: int, count: int, rng: SplitMix64) -> list[tuple[int, ...]]:
    total = comb(n, r)
    if count >= total or total <= 4 * count:
        pool = list(combinations(range(1, n + 1), r))
        return sorted(rng.sample(pool, min(count, total)))
    seen = set()
    while len(seen) < count:
        seen.add(tuple(sorted(rng.sample(range(1, n + 1), r))))
    return sorted(seen)


def _incidence(n: int, weights: dict) -> list:
    inc = [0] * (n + 1)
    for e, w in weights.items():
        for v in e:
            inc[v] += w
    return inc


def _cyclic_windows(n: int, r: int) -> list[tuple[int, ...]]:
    return sorted({tuple(sorted((s + t) % n + 1 for t in range(r))) for s in range(n)})


def _random_uniform_weights(n: int, r: int, c: Fraction, rounds: int, rng: SplitMix64) -> dict:
    count = min(comb(n, r), rng.randint(n, 3 * n))
    edges = _random_edges(n, r, count, rng)
    raw = [rng.randint(1, 64) for _ in edges]
    # Work in integer units of 1/Q: every repair amount is a multiple of it.
    Q = lcm(sum(raw), c.denominator)
    unit = Q // sum(raw)
    cap = int(c * Q)
    w = {e: a * unit for e, a in zip(edges, raw)}
    windows = _cyclic_windows(n, r)

    # Repair: push the excess of the most loaded vertex onto the least
    # loaded edge that can absorb it.
    inc = _incidence(n, w)
    for _ in range(rounds):
        v = max(range(1, n + 1), key=lambda x: (inc[x], -x))
        excess = inc[v] - cap
        if excess <= 0:
            break
        donor = max((e for e in w if v in e), key=lambda e: (w[e], e))
        best = None
        for e in set(w) | set(windows):
            if v in e:
                continue
            load = max(inc[u] for u in e)
            if load < cap and (best is None or (load, e) < best[:2]):
                best = (load, e)
        if best is None:
            break
        load, target = best
        amount = min(excess, w[donor], cap - load)
        w[donor] -= amount
        w[target] = w.get(target, 0) + amount
        for u in donor:
            inc[u] -= amount
        for u in target:
            inc[u] += amount
        if w[donor] == 0:
            del w[donor]

    weights = {e: Fraction(x, Q) for e, x in w.items()}
    base = Fraction(r, n)
    alpha = max(
        ((Fraction(inc[v], Q) - c) / (Fraction(inc[v], Q) - base)
         for v in range(1, n + 1) if inc[v] > cap),
        default=Fraction(0),
    )
    if alpha:
        # Blend with the cyclic design, whose every vertex has incidence r/n.
        mixed = {e: (1 - alpha) * x for e, x in weights.items()}
        for e in windows:
            mixed[e] = mixed.get(e, Fraction(0)) + alpha / len(windows)
        weights = mixed
    return weights


def gen_random_family(n: int, k: int, r: int, c, seed: int) -> InstanceFamily:
    """Random ``r``-uniform family whose cover slack is at most ``c``.

    Each hypergraph starts from ``n..3n`` random edges with random weights,
    then at most ``4 n k`` repair moves shift excess incidence away from the
    most loaded vertex. Anything still overloaded is blended with the cyclic
    design ``{s, s+1, ..., s+r-1}`` by the smallest sufficient amount.
    """
    c = as_fraction(c)
    if not (n >= r >= 1 and k >= 1):
        raise ParameterError("need n >= r >= 1 and k >= 1")
    if c <= 0:
        raise ParameterError("c must be positive")
    if c < Fraction(r, n):
        raise InfeasibleError(f"c = {c} is below r/n = {Fraction(r, n)}; some vertex must carry more")
    rng = SplitMix64(seed)
    hs = []
    for _ in range(k):
        w = _random_uniform_weights(n, r, c, 4 * n * k, rng.spawn())
        hs.append(WeightedHypergraph(n, w))
    return InstanceFamily(hs)


def gen_mixed_family(n: int, k: int, sizes, seed: int, edges: int | None = None) -> InstanceFamily:
    """Random family with edge cardinalities drawn from ``sizes`` (no slack target)."""
    rng = SplitMix64(seed)
    sizes = [s for s in sizes if 1 <= s <= n]
    if not sizes:
        raise ParameterError("no admissible edge cardinality")
    hs = []
    for _ in range(k):
        count = edges if edges is not None else rng.randint(1, 2 * n)
        chosen = set()
        for _ in range(count):
            s = rng.choice(sizes)
            chosen.add(tuple(sorted(rng.sample(range(1, n + 1), s))))
        chosen = sorted(chosen)
        raw = [rng.randint(1, 32) for _ in chosen]
        total = sum(raw)
        hs.append(WeightedHypergraph(n, {e: Fraction(a, total) for e, a in zip(chosen, raw)}))
    return InstanceFamily(hs)


def gen_zero_sum_vectors(n: int, d: int, seed: int, spread: int = 12) -> VectorFamily:
    """``n`` random rational vectors in ``R^d``, recentred to sum to zero."""
    rng = SplitMix64(seed)
    rows = [[Fraction(rng.randint(-spread, spread), spread) for _ in range(d)] for _ in range(n)]
    mean = [sum(r[i] for r in rows) / n for i in range(d)]
    return VectorFamily(d, tuple(tuple(r[i] - mean[i] for i in range(d)) for r in rows))


# -- Hadamard hard instances ------------------------------------------------------


def sylvester(k: int) -> list[list[int]]:
    if k < 1 or k & (k - 1):
        raise ParameterError(f"Sylvester order must be a power of two, got {k}")
    H = [[1]]
    while len(H) < k:
        H = [row + row for row in H] + [row + [-x for x in row] for row in H]
    return H


def gen_hadamard_vectors(k: int) -> VectorFamily:
    """Rows of the Sylvester matrix ``H_k`` plus ``k`` copies of ``-e_1``.

    The rows sum to ``(k, 0, ..., 0)`` because the first column is all ones
    and every other column is balanced; the copies of ``-e_1`` cancel it.
    """
    H = sylvester(k)
    neg = tuple([-1] + [0] * (k - 1))
    rows = [tuple(r) for r in H] + [neg] * k
    return VectorFamily(k, tuple(rows))


def vectors_to_family(V: VectorFamily, c, theta) -> InstanceFamily:
    """1-uniform family with ``w_k(j) = 1/n`` and ``w_i(j) = 1/n + v_j[i]``.

    ``V`` is padded with zero vectors to ``n = max(|V|, ceil(1/((1-theta) c)))``.
    Every resulting weight must land in ``[0, c]``; a negative weight (an
    entry below ``-1/n``) is reported as a :class:`ReductionError`.
    """
    c, theta = as_fraction(c), as_fraction(theta)
    if not 0 < theta < 1 or c <= 0:
        raise ReductionError("need c > 0 and 0 < theta < 1")
    if not V.is_zero_sum():
        raise ReductionError("vectors must sum to zero")
    if V.max_norm > theta * c:
        raise ReductionError(f"max norm {V.max_norm} exceeds theta*c = {theta * c}")
    need = -((-1) // ((1 - theta) * c))  # ceil
    n = max(len(V), int(need))
    P = V.padded(n)
    base = Fraction(1, n)
    rows = [[base + v[i] for v in P.vectors] for i in range(V.d)] + [[base] * n]
    for i, row in enumerate(rows, 1):
        for j, w in enumerate(row, 1):
            if w < 0 or w > c:
                raise ReductionError(f"w_{i}({j}) = {w} falls outside [0, {c}]")
    return InstanceFamily.from_vertex_weights(rows)


# -- almost-regular counterexample ---------------------------------------------------


@dataclass
class AlmostRegularGraph:
    """Left set ``[n]``, two right blocks of ``m`` vertices, unequal right degrees."""

    n: int
    m: int
    right_vertices: tuple  # (block, neighbours) pairs, blocks 1 and 2

    def block_masks(self, i: int) -> list[int]:
        return [subset_mask(self.n, nb) for b, nb in self.right_vertices if b == i]

    def coverage(self, S) -> tuple[int, int]:
        mask = subset_mask(self.n, S)
        return tuple(sum(1 for x in self.block_masks(i) if x & mask) for i in (1, 2))


@dataclass
class AlmostRegularReport:
    c: Fraction
    eps: Fraction
    r: int
    m: int
    seed: int
    model: str
    success: bool = False
    attempts: int = 0
    bullets: dict = field(default_factory=dict)
    failure_counts: dict = field(default_factory=lambda: {"a": 0, "b": 0, "c": 0, "d": 0})
    min_gap: int | None = None
    gap_threshold: Fraction | None = None
    subset_size: int | None = None
    subsets_checked: int = 0
    exhaustive: bool = False
    certified: bool = False

    @property
    def worst_bullet(self) -> str:
        return max(self.failure_counts, key=lambda b: (self.failure_counts[b], b))


def _block_probability(c: Fraction, eps: Fraction, i: int) -> Fraction:
    return c * (1 - (2 * i - 1) * eps / 4)


def _sample_independent(A: int, m: int, c, eps, rng: SplitMix64) -> list:
    right = []
    for i in (1, 2):
        p = _block_probability(c, eps, i)
        for _ in range(m):
            nb = tuple(a for a in range(1, A + 1) if rng.bernoulli(p.numerator, p.denominator))
            right.append((i, nb))
    return right


def _sample_balanced(A: int, m: int, c, eps, rng: SplitMix64) -> list:
    """Fixed right degree ``d_i`` per block with left degrees differing by at most one.

    ``d_i = floor(A * p_i)`` where ``p_i`` is the block's edge probability,
    so the edge density is the same as in the independent model while the
    degrees are concentrated by construction.
    """
    right = []
    for i in (1, 2):
        d = floor(A * _block_probability(c, eps, i))
        stubs_total = m * d
        base, extra = divmod(stubs_total, A)
        lefts = list(range(1, A + 1))
        rng.shuffle(lefts)
        stubs = []
        for pos, a in enumerate(lefts):
            stubs.extend([a] * (base + (1 if pos < extra else 0)))
        rng.shuffle(stubs)
        groups = [stubs[t * d:(t + 1) * d] for t in range(m)]
        for _ in range(50):
            moved = 0
            for g in range(m):
                seen = set()
                for s in range(d):
                    a = groups[g][s]
                    if a in seen:
                        h = rng.below(m)
                        t = rng.below(d)
                        groups[g][s], groups[h][t] = groups[h][t], groups[g][s]
                        moved += 1
                    seen.add(groups[g][s])
            if not moved:
                break
        for g in groups:
            right.append((i, tuple(sorted(set(g)))))
    return right


def _check_almost_regular(G: AlmostRegularGraph, report: AlmostRegularReport, exhaustive_cap: int,
                          sample_size: int, rng: SplitMix64) -> dict:
    c, eps, r, m = report.c, report.eps, report.r, report.m
    A = G.n
    counts = [sum(1 for b, _ in G.right_vertices if b == i) for i in (1, 2)]
    bullets = {"a": A * c == r and counts == [m, m]}
    masks = [G.block_masks(1), G.block_masks(2)]
    ok_b = True
    for a in range(1, A + 1):
        bit = 1 << (a - 1)
        for blk in masks:
            if sum(1 for x in blk if x & bit) > c * m:
                ok_b = False
    bullets["b"] = ok_b
    bullets["c"] = all((1 - eps) * r <= len(nb) <= r for _, nb in G.right_vertices)
    s = int(1 / (4 * c))
    report.subset_size = s
    report.gap_threshold = eps * m / 40
    # neighbour sets of each left vertex as bitmasks over the block
    left = []
    for blk in masks:
        nb = [0] * (A + 1)
        for t, x in enumerate(blk):
            a = 1
            while x:
                if x & 1:
                    nb[a] |= 1 << t
                x >>= 1
                a += 1
        left.append(nb)
    total = comb(A, s)
    exhaustive = total <= exhaustive_cap
    if exhaustive:
        subsets = combinations(range(1, A + 1), s)
    else:
        subsets = (tuple(rng.sample(range(1, A + 1), s)) for _ in range(sample_size))
    min_gap = None
    checked = 0
    for S in subsets:
        u1 = u2 = 0
        for a in S:
            u1 |= left[0][a]
            u2 |= left[1][a]
        gap = abs(u1.bit_count() - u2.bit_count())
        checked += 1
        if min_gap is None or gap < min_gap:
            min_gap = gap
    bullets["d"] = min_gap is not None and 40 * min_gap >= eps * m
    report.min_gap = min_gap
    report.subsets_checked = checked
    report.exhaustive = exhaustive
    return bullets


def gen_almost_regular(c, eps, r: int, m: int, seed: int, retry_budget: int = 200,
                       model: str = "balanced", exhaustive_cap: int = 10**7,
                       sample_size: int = 200_000):
    """Two-block graph with nearly regular right side and no balanced small subsets.

    Returns ``(graph, report)``. Block ``i`` has edge density
    ``c (1 - (2i-1) eps / 4)``. ``model="independent"`` includes each edge
    independently with that probability; ``model="balanced"`` (default) fixes
    the right degrees and spreads left degrees evenly, which is what makes
    the four properties hold at moderate ``r`` and ``m``.

    Raises :class:`GenerationFailure` (with the report attached) when no
    sample within ``retry_budget`` satisfies all four properties.
    """
    c, eps = as_fraction(c), as_fraction(eps)
    if not 0 < c < Fraction(1, 4):
        raise ParameterError("need 0 < c < 1/4")
    inv = 1 / (4 * c)
    if inv.denominator != 1:
        raise ParameterError(f"(4c)^-1 = {inv} is not an integer")
    if not 0 < eps < 1:
        raise ParameterError("need 0 < eps < 1")
    if r < 1 or m < 1:
        raise ParameterError("r and m must be positive")
    if model not in ("balanced", "independent"):
        raise ParameterError(f"unknown model {model!r}")
    A = int(r / c)
    rng = SplitMix64(seed)
    report = AlmostRegularReport(c, eps, r, m, seed, model)
    for attempt in range(1, retry_budget + 1):
        sub = rng.spawn()
        if model == "balanced":
            right = _sample_balanced(A, m, c, eps, sub)
        else:
            right = _sample_independent(A, m, c, eps, sub)
        G = AlmostRegularGraph(A, m, tuple(right))
        bullets = _check_almost_regular(G, report, exhaustive_cap, sample_size, sub)
        report.attempts = attempt
        report.bullets = bullets
        for b, ok in bullets.items():
            if not ok:
                report.failure_counts[b] += 1
        if all(bullets.values()):
            report.success = True
            report.certified = report.exhaustive
            return G, report
    raise GenerationFailure(
        f"no valid graph in {retry_budget} attempts; bullet ({report.worst_bullet}) failed most often",
        report,
    )

"""Exact-rational domain types and the basic set functionals.

Vertices are labelled ``1..n``. Subsets are passed as any iterable of
vertex labels; internally they become bitmasks with vertex ``v`` at bit
``v - 1``.

Weights are :class:`fractions.Fraction`. Each hypergraph also keeps its
weights as integers over one common denominator, so ``w*`` is an integer
sum followed by a single division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionError,
    InvalidGraphError,
    InvalidSubsetError,
    PreconditionError,
    ValidationError,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Exact conversion; strings may be ``"p/q"`` or decimals like ``"0.15"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact weights")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational number: {x!r}") from exc


def subset_mask(n: int, S: Iterable[int] | int) -> int:
    """Bitmask of a vertex subset of ``[n]``; an ``int`` is taken as a ready mask."""
    if isinstance(S, int):
        if S < 0 or S >> n:
            raise InvalidSubsetError(f"mask {S:#x} is not a subset of [{n}]")
        return S
    mask = 0
    for v in S:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise InvalidSubsetError(f"vertex {v!r} outside [1, {n}]")
        mask |= 1 << (v - 1)
    return mask


def mask_members(mask: int) -> list[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


class WeightedHypergraph:
    """A probability distribution on nonempty subsets of ``[n]``.

    ``edges`` maps vertex collections to weights. Keys are canonicalised to
    sorted tuples; zero-weight entries are dropped (an edge is a set of
    positive weight), negative ones rejected.
    """

    __slots__ = ("_n", "_edges", "_masks", "_nums", "_den", "_uniform", "_incident")

    def __init__(self, n: int, edges: Mapping | Iterable[tuple[Iterable[int], object]]):
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"ground size must be a positive integer, got {n!r}")
        items = edges.items() if isinstance(edges, Mapping) else edges
        canon: dict[tuple[int, ...], Fraction] = {}
        for verts, weight in items:
            key = tuple(sorted(verts))
            if not key:
                raise ValidationError("empty edge: the empty set carries no weight")
            if len(set(key)) != len(key):
                raise ValidationError(f"edge {key} repeats a vertex")
            for v in key:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ValidationError(f"edge {key} has vertex outside [1, {n}]")
            if key in canon:
                raise ValidationError(f"duplicate edge {key}")
            w = as_fraction(weight)
            if w < 0:
                raise ValidationError(f"negative weight {w} on edge {key}")
            canon[key] = w
        canon = {e: w for e, w in sorted(canon.items()) if w != 0}
        total = sum(canon.values(), ZERO)
        if total != 1:
            raise ValidationError(f"edge weights sum to {total}, expected 1")
        self._n = n
        self._edges = MappingProxyType(canon)
        self._den = lcm(*(w.denominator for w in canon.values()))
        self._masks = tuple(subset_mask(n, e) for e in canon)
        self._nums = tuple(w.numerator * (self._den // w.denominator) for w in canon.values())
        sizes = {len(e) for e in canon}
        self._uniform = sizes.pop() if len(sizes) == 1 else None
        incident: list[list[int]] = [[] for _ in range(n + 1)]
        for idx, e in enumerate(canon):
            for v in e:
                incident[v].append(idx)
        self._incident = tuple(tuple(x) for x in incident)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Mapping[tuple[int, ...], Fraction]:
        return self._edges

    @property
    def uniformity(self) -> int | None:
        """Common edge cardinality, or ``None`` for mixed cardinalities."""
        return self._uniform

    def is_uniform(self, r: int) -> bool:
        return self._uniform == r

    @property
    def denominator(self) -> int:
        return self._den

    def scaled_edges(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        """``(masks, numerators, D)`` with weight of edge ``e`` = ``numerators[e] / D``."""
        return self._masks, self._nums, self._den

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def w_star_scaled(self, mask: int) -> int:
        return sum(w for m, w in zip(self._masks, self._nums) if m & ~mask == 0)

    def w_star(self, S) -> Fraction:
        return Fraction(self.w_star_scaled(subset_mask(self._n, S)), self._den)

    def delta(self, j: int, S) -> Fraction:
        mask = subset_mask(self._n, S)
        if not 1 <= j <= self._n or not mask >> (j - 1) & 1:
            raise PreconditionError(f"vertex {j} is not in the subset")
        total = sum(
            self._nums[e] for e in self._incident[j] if self._masks[e] & ~mask == 0
        )
        return Fraction(total, self._den)

    def incidence(self, j: int) -> Fraction:
        """Total weight of edges through ``j``, i.e. ``1 - w*([n] - {j})``."""
        return Fraction(sum(self._nums[e] for e in self._incident[j]), self._den)

    def __eq__(self, other):
        if not isinstance(other, WeightedHypergraph):
            return NotImplemented
        return self._n == other._n and dict(self._edges) == dict(other._edges)

    def __hash__(self):
        return hash((self._n, tuple(self._edges.items())))

    def __repr__(self):
        body = ", ".join(f"{e}: {w}" for e, w in self._edges.items())
        return f"WeightedHypergraph(n={self._n}, {{{body}}})"


class InstanceFamily:
    """``k`` weighted hypergraphs on a common ground set."""

    __slots__ = ("_hypergraphs", "_n", "_r")

    def __init__(self, hypergraphs: Sequence[WeightedHypergraph]):
        hs = tuple(hypergraphs)
        if not hs:
            raise ValidationError("a family needs at least one hypergraph")
        n = hs[0].n
        for idx, h in enumerate(hs, 1):
            if not isinstance(h, WeightedHypergraph):
                raise ValidationError(f"hypergraph {idx} has type {type(h).__name__}")
            if h.n != n:
                raise ValidationError(f"hypergraph {idx} lives on [{h.n}], expected [{n}]")
        unif = {h.uniformity for h in hs}
        self._hypergraphs = hs
        self._n = n
        self._r = unif.pop() if len(unif) == 1 else None

    @classmethod
    def from_weights(cls, n: int, weight_maps: Iterable) -> "InstanceFamily":
        return cls([WeightedHypergraph(n, w) for w in weight_maps])

    @classmethod
    def from_vertex_weights(cls, rows: Iterable[Sequence]) -> "InstanceFamily":
        """1-uniform family from rows of per-vertex weights."""
        rows = [list(r) for r in rows]
        n = len(rows[0])
        return cls([WeightedHypergraph(n, {(j + 1,): w for j, w in enumerate(r)}) for r in rows])

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return len(self._hypergraphs)

    @property
    def r(self) -> int | None:
        return self._r

    @property
    def hypergraphs(self) -> tuple[WeightedHypergraph, ...]:
        return self._hypergraphs

    def __getitem__(self, i: int) -> WeightedHypergraph:
        return self._hypergraphs[i]

    def __iter__(self):
        return iter(self._hypergraphs)

    def __len__(self):
        return len(self._hypergraphs)

    def common_denominator(self) -> int:
        return lcm(*(h.denominator for h in self._hypergraphs))

    def __eq__(self, other):
        if not isinstance(other, InstanceFamily):
            return NotImplemented
        return self._hypergraphs == other._hypergraphs

    def __hash__(self):
        return hash(self._hypergraphs)

    def __repr__(self):
        return f"InstanceFamily(n={self._n}, k={self.k}, r={self._r})"


class BlockedBipartiteGraph:
    """Left side ``A = [n]``; right side split into ``k`` blocks of ``m`` vertices.

    ``right_vertices`` lists ``(block, neighbours)`` with blocks numbered
    ``1..k``. Every right vertex must have exactly ``r`` neighbours.
    """

    __slots__ = ("n", "k", "m", "r", "right_vertices", "_block_masks")

    def __init__(self, n: int, k: int, m: int, r: int, right_vertices):
        if n < 1 or k < 1 or m < 1 or r < 1:
            raise InvalidGraphError("n, k, m, r must all be positive")
        rv = []
        counts = [0] * (k + 1)
        block_masks: list[list[int]] = [[] for _ in range(k)]
        for idx, (block, nbrs) in enumerate(right_vertices):
            if not isinstance(block, int) or not 1 <= block <= k:
                raise InvalidGraphError(f"right vertex {idx}: block {block!r} outside [1, {k}]")
            nb = tuple(sorted(nbrs))
            if len(set(nb)) != len(nb):
                raise InvalidGraphError(f"right vertex {idx}: repeated neighbour (no multi-edges)")
            if len(nb) != r:
                raise InvalidGraphError(f"right vertex {idx} has degree {len(nb)}, expected {r}")
            try:
                mask = subset_mask(n, nb)
            except InvalidSubsetError as exc:
                raise InvalidGraphError(f"right vertex {idx}: {exc}") from None
            counts[block] += 1
            rv.append((block, nb))
            block_masks[block - 1].append(mask)
        for i in range(1, k + 1):
            if counts[i] != m:
                raise InvalidGraphError(f"block {i} has {counts[i]} vertices, expected {m}")
        self.n, self.k, self.m, self.r = n, k, m, r
        self.right_vertices = tuple(rv)
        self._block_masks = tuple(tuple(b) for b in block_masks)

    def block_masks(self, i: int) -> tuple[int, ...]:
        """Neighbour masks of the right vertices of block ``i`` (1-based)."""
        return self._block_masks[i - 1]

    def coverage(self, S) -> tuple[int, ...]:
        """``|N(S, B_i)|`` for every block."""
        mask = subset_mask(self.n, S)
        return tuple(sum(1 for b in blk if b & mask) for blk in self._block_masks)

    def degree(self, a: int, i: int) -> int:
        bit = 1 << (a - 1)
        return sum(1 for b in self._block_masks[i - 1] if b & bit)

    def max_left_degree(self) -> int:
        return max(self.degree(a, i) for a in range(1, self.n + 1) for i in range(1, self.k + 1))

    def __eq__(self, other):
        if not isinstance(other, BlockedBipartiteGraph):
            return NotImplemented
        return (self.n, self.k, self.m, self.r, self.right_vertices) == (
            other.n, other.k, other.m, other.r, other.right_vertices)

    def __repr__(self):
        return f"BlockedBipartiteGraph(n={self.n}, k={self.k}, m={self.m}, r={self.r})"


@dataclass(frozen=True)
class Chain:
    """An ordering of ``[n]``; prefix ``j`` is the set ``S_j``.

    ``unbalances[j-1]`` is the unbalance of ``S_j`` when the chain was built
    against a family; ``None`` for bare orderings.
    """

    order: tuple[int, ...]
    unbalances: tuple[Fraction, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise ValidationError(f"chain order {order} is not a permutation of [1..{len(order)}]")
        if self.unbalances is not None:
            ub = tuple(self.unbalances)
            if len(ub) != len(order):
                raise ValidationError("trace length differs from chain length")
            object.__setattr__(self, "unbalances", ub)

    @property
    def n(self) -> int:
        return len(self.order)

    def prefix(self, j: int) -> frozenset[int]:
        return frozenset(self.order[:j])

    def prefixes(self):
        acc = set()
        for v in self.order:
            acc.add(v)
            yield frozenset(acc)

    def prefix_masks(self) -> list[int]:
        out, mask = [], 0
        for v in self.order:
            mask |= 1 << (v - 1)
            out.append(mask)
        return out

    @property
    def max_unbalance(self) -> Fraction | None:
        return max(self.unbalances) if self.unbalances else None


# -- functionals --------------------------------------------------------------


def w_star(H: WeightedHypergraph, S) -> Fraction:
    """Total weight of the edges of ``H`` lying inside ``S``."""
    return H.w_star(S)


def delta(H: WeightedHypergraph, j: int, S) -> Fraction:
    """Drop of ``w*`` when ``j`` is removed from ``S`` (requires ``j in S``)."""
    return H.delta(j, S)


def phi(F: InstanceFamily, S) -> tuple[Fraction, ...]:
    """Vector of ``w_i*(S) - w_k*(S)`` for ``i < k``."""
    if F.k < 2:
        raise DimensionError("phi needs at least two hypergraphs")
    mask = subset_mask(F.n, S)
    last = F[F.k - 1].w_star(mask)
    return tuple(h.w_star(mask) - last for h in F.hypergraphs[:-1])


def phi_norm_sq(F: InstanceFamily, S) -> Fraction:
    return sum((x * x for x in phi(F, S)), ZERO)


def unbalance(F: InstanceFamily, S) -> Fraction:
    """Largest pairwise gap ``|w_a*(S) - w_b*(S)|``; zero when ``k == 1``."""
    mask = subset_mask(F.n, S)
    vals = [h.w_star(mask) for h in F]
    return max(vals) - min(vals)


def cover_slack(F: InstanceFamily) -> Fraction:
    """Smallest ``c`` with ``w_i*([n] - {j}) >= 1 - c`` for all ``i, j``."""
    return max(h.incidence(j) for h in F for j in range(1, F.n + 1))


def question_valid(F: InstanceFamily) -> bool:
    return cover_slack(F) < Fraction(1, 2)


# Float mirrors: used only for timing comparisons in the benchmark, never to
# certify anything.


def w_star_float(H: WeightedHypergraph, S) -> float:
    mask = subset_mask(H.n, S)
    masks, nums, den = H.scaled_edges()
    return sum(w for m, w in zip(masks, nums) if m & ~mask == 0) / den


def unbalance_float(F: InstanceFamily, S) -> float:
    vals = [w_star_float(h, S) for h in F]
    return max(vals) - min(vals)


def cover_slack_float(F: InstanceFamily) -> float:
    return float(cover_slack(F))


def unbalance_trace(F: InstanceFamily, order) -> tuple[Fraction, ...]:
    """Unbalance of every prefix of ``order``, grown one vertex at a time."""
    D = F.common_denominator()
    scaled = []
    for h in F:
        masks, nums, den = h.scaled_edges()
        scaled.append((masks, [w * (D // den) for w in nums], h))
    tot = [0] * F.k
    mask = 0
    out = []
    for v in order:
        mask |= subset_mask(F.n, (v,))
        for i, (masks, nums, h) in enumerate(scaled):
            tot[i] += sum(nums[e] for e in h.incident_edges(v) if masks[e] & ~mask == 0)
        out.append(Fraction(max(tot) - min(tot), D))
    return tuple(out)

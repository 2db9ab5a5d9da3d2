"""Steinitz orderings of zero-sum vector families.

The construction keeps nested index sets ``A_n > A_{n-1} > ... > A_d`` with
``|A_t| = t`` and weights ``lam_t : A_t -> [0, 1]`` such that

    sum(lam_t) = t - d    and    sum(lam_t[v] * v) = 0.

Passing from ``t`` to ``t - 1`` rescales ``lam_t`` to total ``t - 1 - d`` and
walks to an extreme point of that polytope. An extreme point has at most
``d + 1`` fractional coordinates, which forces some coordinate to be 0; that
index is dropped and becomes position ``t`` of the ordering. The prefix of
length ``t`` is then ``sum((1 - lam_t[v]) * v)``, whose coefficients sum to
``d``, so its infinity norm is at most ``d`` times the largest input norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .core import InstanceFamily, as_fraction
from .errors import DimensionError, InvariantViolation, PreconditionError, UniformityError
from .linalg import walk_to_vertex


@dataclass(frozen=True)
class VectorFamily:
    """Finite multiset of ``d``-dimensional rational vectors."""

    d: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise DimensionError("dimension must be at least 1")
        vecs = tuple(tuple(as_fraction(x) for x in v) for v in self.vectors)
        for idx, v in enumerate(vecs):
            if len(v) != self.d:
                raise DimensionError(f"vector {idx} has dimension {len(v)}, expected {self.d}")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def of(cls, vectors: Sequence[Sequence]) -> "VectorFamily":
        vectors = list(vectors)
        if not vectors:
            raise DimensionError("cannot infer the dimension of an empty family")
        return cls(len(vectors[0]), tuple(tuple(v) for v in vectors))

    def __len__(self):
        return len(self.vectors)

    @property
    def max_norm(self) -> Fraction:
        return max((abs(x) for v in self.vectors for x in v), default=Fraction(0))

    @property
    def total(self) -> tuple[Fraction, ...]:
        return tuple(sum((v[i] for v in self.vectors), Fraction(0)) for i in range(self.d))

    def is_zero_sum(self) -> bool:
        return all(x == 0 for x in self.total)

    def scaled(self, factor) -> "VectorFamily":
        f = as_fraction(factor)
        return VectorFamily(self.d, tuple(tuple(f * x for x in v) for v in self.vectors))

    def padded(self, count: int) -> "VectorFamily":
        """Append zero vectors until there are ``count`` of them."""
        extra = max(0, count - len(self.vectors))
        zero = tuple(Fraction(0) for _ in range(self.d))
        return VectorFamily(self.d, self.vectors + (zero,) * extra)


def prefix_norms(V: VectorFamily, order) -> list[Fraction]:
    """Infinity norm of each prefix sum along ``order`` (0-based indices)."""
    acc = [Fraction(0)] * V.d
    out = []
    for idx in order:
        acc = [a + x for a, x in zip(acc, V.vectors[idx])]
        out.append(max(abs(a) for a in acc))
    return out


def _integer_rows(V: VectorFamily) -> list[list[int]]:
    den = lcm(*(x.denominator for v in V.vectors for x in v)) if V.vectors else 1
    return [[int(x * den) for x in v] for v in V.vectors]


def steinitz_order(V: VectorFamily) -> list[int]:
    """0-based ordering whose prefix sums stay within ``d * max_norm`` in the infinity norm."""
    n, d = len(V), V.d
    if n < 1:
        raise PreconditionError("need at least one vector")
    if not V.is_zero_sum():
        raise PreconditionError(f"vectors sum to {V.total}, not zero")
    if n <= d:
        order = list(range(n))
    else:
        ints = _integer_rows(V)
        cols = {i: (1, *ints[i]) for i in range(n)}
        lam = {i: Fraction(n - d, n) for i in range(n)}
        order = [None] * n
        for t in range(n, d, -1):
            target = t - 1 - d
            ratio = Fraction(target, t - d)
            mu = {i: x * ratio for i, x in lam.items()}
            mu = walk_to_vertex(mu, cols, 0, 1, d + 2)
            zeros = [i for i in sorted(mu) if mu[i] == 0]
            if not zeros:
                raise InvariantViolation("extreme point without a zero coordinate")
            e = zeros[0]
            order[t - 1] = e
            del mu[e]
            lam = mu
        order[:d] = sorted(lam)
    bound = d * V.max_norm
    for j, val in enumerate(prefix_norms(V, order), 1):
        if val > bound:
            raise InvariantViolation(f"prefix {j} has norm {val} > {bound}")
    return order


def family_to_vectors(F: InstanceFamily) -> VectorFamily:
    """Per-vertex differences ``w_i(j) - w_k(j)`` of a 1-uniform family."""
    if F.r != 1:
        raise UniformityError("family_to_vectors needs a 1-uniform family")
    if F.k < 2:
        raise DimensionError("need at least two hypergraphs")
    zero = Fraction(0)
    last = F[F.k - 1].edges
    rows = []
    for j in range(1, F.n + 1):
        wk = last.get((j,), zero)
        rows.append(tuple(h.edges.get((j,), zero) - wk for h in F.hypergraphs[:-1]))
    return VectorFamily(F.k - 1, tuple(rows))

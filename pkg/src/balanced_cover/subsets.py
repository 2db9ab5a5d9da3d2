"""Whole-lattice tables over all ``2**n`` subsets, as numpy arrays.

Entry ``mask`` of :func:`w_star_table` is ``D * w*(mask)`` for the family's
common denominator ``D``. int64 is used when the values provably fit,
object arrays of Python ints otherwise.
"""

from __future__ import annotations

import numpy as np

from .core import InstanceFamily

INT64_SAFE = 1 << 62


def _dtype_for(D: int):
    return np.int64 if D < INT64_SAFE else object


def w_star_table(F: InstanceFamily, i: int, D: int | None = None) -> np.ndarray:
    """``D * w_i*(S)`` for every subset mask ``S`` (subset-sum zeta transform)."""
    D = F.common_denominator() if D is None else D
    n = F.n
    h = F[i]
    masks, nums, den = h.scaled_edges()
    arr = np.zeros(1 << n, dtype=_dtype_for(D))
    for m, w in zip(masks, nums):
        arr[m] += w * (D // den)
    for b in range(n):
        view = arr.reshape(-1, 2, 1 << b)
        view[:, 1, :] += view[:, 0, :]
    return arr


def popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        view = pc.reshape(-1, 2, 1 << b)
        view[:, 1, :] += 1
    return pc

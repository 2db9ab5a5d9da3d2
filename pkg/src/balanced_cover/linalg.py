"""Small exact linear algebra over Fractions: RREF, rank, one null vector."""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form. Returns ``(matrix, pivot_columns)``."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        if piv != 1:
            A[r] = [x / piv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                Ar = A[r]
                A[i] = [a - f * b for a, b in zip(A[i], Ar)]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def null_vector(rows, ncols: int | None = None):
    """A nonzero ``z`` with ``rows @ z = 0``, or ``None`` if the columns are independent.

    The free variable used is the first non-pivot column, set to 1.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return None
    if not rows:
        z = [Fraction(0)] * ncols
        z[0] = Fraction(1)
        return z
    R, pivots = rref(rows)
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    z = [Fraction(0)] * ncols
    z[free] = Fraction(1)
    for row, pc in zip(R, pivots):
        z[pc] = -row[free]
    return z


def walk_to_vertex(point: dict, cols: dict, lo, hi, width: int) -> dict:
    """Move ``point`` inside the box ``[lo, hi]`` until its free columns are independent.

    ``cols[i]`` is the constraint column of coordinate ``i``; moves stay in
    the null space of the free columns, so every constraint value is kept.
    Only ``width`` free coordinates (``rows + 1`` suffices) enter each solve,
    and each move pins at least one coordinate to a bound. Ties between
    coordinates are resolved by index order.
    """
    while True:
        free = [i for i in sorted(point) if lo < point[i] < hi]
        window = free[:width]
        if not window:
            return point
        nrows = len(cols[window[0]])
        z = null_vector([[cols[i][r] for i in window] for r in range(nrows)], len(window))
        if z is None:
            if len(window) < len(free):
                raise ArithmeticError("window too narrow for the constraint rank")
            return point
        if next(x for x in z if x) < 0:
            z = [-x for x in z]
        step = None
        for i, zi in zip(window, z):
            if zi > 0:
                s = (hi - point[i]) / zi
            elif zi < 0:
                s = (point[i] - lo) / -zi
            else:
                continue
            if step is None or s < step:
                step = s
        for i, zi in zip(window, z):
            if zi:
                point[i] = point[i] + step * zi

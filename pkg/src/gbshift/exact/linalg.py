"""Exact dense linear algebra over the Gaussian rationals.

Matrices are plain lists of rows.  Elimination is Bareiss' fraction-free
scheme: every intermediate entry is a minor of the input, and each division
by the previous pivot is exact.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import NoSolution
from .gaussian import ONE, ZERO, GaussianRational, gq

Matrix = list  # list[list[GaussianRational]]


def as_matrix(rows) -> Matrix:
    return [[gq(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def shape(a: Matrix) -> tuple:
    return (len(a), len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    out = zeros(m, n)
    for i in range(m):
        row = a[i]
        orow = out[i]
        for p in range(k):
            x = row[p]
            if not x:
                continue
            brow = b[p]
            for j in range(n):
                if brow[j]:
                    orow[j] = orow[j] + x * brow[j]
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a]


def pad_rows(a: Matrix, m: int) -> Matrix:
    """Append zero rows up to ``m`` rows (used to compare maps into C[z]_n)."""
    n = shape(a)[1]
    if len(a) > m:
        if any(any(r) for r in a[m:]):
            raise ValueError("cannot drop nonzero rows")
        return [list(r) for r in a[:m]]
    return [list(r) for r in a] + zeros(m - len(a), n)


def _bareiss(a: Matrix, ncols: int | None = None):
    """Fraction-free row echelon form.

    Returns (echelon, pivot_columns, sign) where sign tracks row swaps.
    Only the first ``ncols`` columns are used as pivot candidates.
    """
    e = [list(r) for r in a]
    m, n = shape(e)
    ncols = n if ncols is None else ncols
    pivots = []
    sign = 1
    prev = ONE
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if e[i][c]), None)
        if p is None:
            continue
        if p != r:
            e[r], e[p] = e[p], e[r]
            sign = -sign
        piv = e[r][c]
        for i in range(r + 1, m):
            lead = e[i][c]
            row_i, row_r = e[i], e[r]
            for j in range(c + 1, n):
                val = piv * row_i[j]
                if lead and row_r[j]:
                    val = val - lead * row_r[j]
                row_i[j] = val / prev if prev != ONE else val
            row_i[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return e, pivots, sign


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(_bareiss(a)[1])


def det(a: Matrix) -> GaussianRational:
    m, n = shape(a)
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    if m == 0:
        return ONE
    e, pivots, sign = _bareiss(a)
    if len(pivots) < m:
        return ZERO
    return e[m - 1][m - 1] * sign


def _back_substitute(e: Matrix, pivots: list, n: int, fixed: dict) -> list:
    x = [ZERO] * n
    for col, val in fixed.items():
        x[col] = val
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = e[r]
        acc = row[n] if len(row) > n else ZERO
        for j in range(c + 1, n):
            if row[j] and x[j]:
                acc = acc - row[j] * x[j]
        x[c] = acc / row[c]
    return x


def nullspace(a: Matrix, ncols: int = 0) -> list:
    """Basis of {v : a v = 0}; each vector is checked exactly before returning.

    ``ncols`` gives the column count of a matrix with no rows.
    """
    m, n = shape(a)
    if m == 0:
        n = ncols
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    e, pivots, _ = _bareiss(a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = _back_substitute(e, pivots, n, {f: ONE})
        basis.append(v)
    for v in basis:
        if any(matvec(a, v)):
            raise ArithmeticError("nullspace vector failed exact verification")
    return basis


def solve(a: Matrix, rhs: Sequence) -> list:
    """One exact solution of a x = rhs (free variables set to 0)."""
    m, n = shape(a)
    rhs = [gq(x) for x in rhs]
    if len(rhs) != m:
        raise ValueError("right-hand side length does not match row count")
    aug = [list(a[i]) + [rhs[i]] for i in range(m)]
    e, pivots, _ = _bareiss(aug, ncols=n + 1)
    if pivots and pivots[-1] == n:
        raise NoSolution("inconsistent linear system")
    x = _back_substitute(e, pivots, n, {})
    if matvec(a, x) != rhs:
        raise NoSolution("exact residual check failed")
    return x


def in_column_span(a: Matrix, v: Sequence) -> bool:
    try:
        solve(a, v)
    except NoSolution:
        return False
    return True


def transpose(a: Matrix) -> Matrix:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]

"""Exact integer linear algebra via fraction-free (Bareiss) elimination.

Inputs are matrices of Python integers, so intermediate growth is handled
by arbitrary-precision arithmetic; no floating point is involved anywhere.
"""

from __future__ import annotations

from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals of an integer matrix.

    Fraction-free Gaussian elimination: every intermediate entry is the
    determinant of a minor of the input, so all divisions are exact.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        for r in range(row + 1, nrows):
            mr = m[r]
            mrow = m[row]
            c = mr[col]
            for j in range(col, ncols):
                mr[j] = (p * mr[j] - c * mrow[j]) // prev
        prev = p
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def is_nonsingular(rows: Sequence[Sequence[int]]) -> bool:
    """True iff the square integer matrix has nonzero determinant."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return integer_rank(rows) == n


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by the Bareiss one-step algorithm."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        for r in range(col + 1, n):
            mr = m[r]
            mc = m[col]
            c = mr[col]
            for j in range(col, n):
                mr[j] = (p * mr[j] - c * mc[j]) // prev
        prev = p
    return sign * m[n - 1][n - 1]

"""Exact linear algebra over the rationals.

Elimination runs on integer matrices (rows cleared of denominators) with
Bareiss' fraction-free update, so intermediate entries stay integral.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def _integer_rows(m: Matrix) -> list[list[int]]:
    rows = []
    for row in m:
        den = 1
        for v in row:
            den = math.lcm(den, Fraction(v).denominator)
        rows.append([int(Fraction(v) * den) for v in row])
    return rows


def bareiss_echelon(m: Matrix) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by fraction-free elimination.

    Returns the integer echelon matrix (only the first ``rank`` rows are
    nonzero) and the list of pivot columns.
    """
    a = _integer_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (piv * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(bareiss_echelon(m)[1])


def nullspace(m: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    if not m:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(m[0])
    ech, pivots = bareiss_echelon(m)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum(ech[r][j] * v[j] for j in range(pc + 1, n))
            v[pc] = Fraction(-s, 1) / ech[r][pc]
        basis.append(v)
    return basis


def rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form (Gauss-Jordan over Fractions), zero rows dropped."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return a[:r]

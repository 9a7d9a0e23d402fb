"""Exact linear algebra over Q.

Rank and row selection use fraction-free integer elimination: each row is
scaled to a primitive integer vector and eliminated by cross-multiplication,
so no division ever leaves the integers.  Determinants use Bareiss'
algorithm, whose divisions are exact.  Kernels are computed by reduced row
echelon form over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _common_denominator(row: Sequence) -> int:
    den = 1
    for x in row:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    return den


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to integers (by the lcm of its denominators)."""
    den = _common_denominator(row)
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incrementally built fraction-free echelon basis of integer row vectors.

    Rows are stored sparsely as ``{column: int}``; each stored row has a
    distinct pivot (its smallest column).
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row) -> dict:
        if not isinstance(row, dict):
            row = {k: v for k, v in enumerate(integer_row(row)) if v}
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                break
            a, b = piv[col], row[col]
            out = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                out[k] = out.get(k, 0) - b * v
            row = _primitive({k: v for k, v in out.items() if v})
        return row

    def add(self, row) -> bool:
        """Insert ``row``; return False if it was already in the span."""
        rest = self.reduce(row)
        if not rest:
            return False
        self.pivots[min(rest)] = _primitive(rest)
        return True


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank over Q."""
    ech = Echelon()
    ncols = len(matrix[0]) if matrix else 0
    for row in matrix:
        ech.add(row)
        if len(ech) == ncols:
            break
    return len(ech)


def independent_rows(matrix: Sequence[Sequence]) -> list[int]:
    """Indices of the first maximal independent set of rows, greedily in row order."""
    ech = Echelon()
    chosen = []
    ncols = len(matrix[0]) if matrix else 0
    for idx, row in enumerate(matrix):
        if len(chosen) == ncols:
            break
        if ech.add(row):
            chosen.append(idx)
    return chosen


def bareiss_determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a square rational matrix by fraction-free elimination."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    scale = 1
    m = []
    for row in matrix:
        scale *= _common_denominator(row)
        m.append(integer_row(row))
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * Fraction(m[n - 1][n - 1]) / scale


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """Rank by dense Bareiss elimination with column skipping."""
    m = [integer_row(r) for r in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, one vector per free column (in column order)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivot_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivot_cols):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            v[pc] = -m[row_idx][free]
        basis.append(v)
    return basis


def primitive_vector(v: Sequence) -> list[int]:
    """Integer multiple of ``v`` with coprime entries and positive first nonzero entry."""
    ints = integer_row(v)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in matrix]

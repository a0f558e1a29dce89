"""Dense exact linear algebra over the rationals.

Rank and echelon forms use fraction-free (Bareiss) elimination on a
denominator-cleared integer copy, so intermediate entries stay minors of
the scaled matrix instead of blowing up as unreduced fractions.  Nullspace
vectors are recovered from the integer echelon form by exact back
substitution and re-checked against the original matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


class RationalMatrix:
    """Immutable-by-convention dense matrix of Fractions with optional labels.

    Equality compares shape and entries; labels are bookkeeping only.
    """

    __slots__ = ("rows", "cols", "entries", "row_labels", "col_labels")

    def __init__(self, entries: Sequence[Sequence], row_labels=None, col_labels=None):
        ents = [[Fraction(x) for x in row] for row in entries]
        rows = len(ents)
        cols = len(ents[0]) if rows else 0
        for row in ents:
            if len(row) != cols:
                raise ValueError("ragged rows in matrix")
        if row_labels is not None and len(row_labels) != rows:
            raise ValueError("row label count does not match row count")
        if col_labels is not None and len(col_labels) != cols:
            raise ValueError("column label count does not match column count")
        self.entries = ents
        self.rows = rows
        self.cols = cols
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        out = cls([[0] * cols for _ in range(rows)])
        out.cols = cols  # a rowless matrix still remembers its width
        return out

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        v = [Fraction(x) for x in vec]
        return [sum((row[j] * v[j] for j in range(self.cols)), Fraction(0)) for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = [[b.entries[i][j] for i in range(b.rows)] for j in range(b.cols)]
    out = [
        [sum((x * y for x, y in zip(arow, bcol)), Fraction(0)) for bcol in bt]
        for arow in a.entries
    ]
    return RationalMatrix(out, row_labels=a.row_labels, col_labels=b.col_labels)


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank and kernel survive."""
    out = []
    for row in m.entries:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _bareiss_echelon(a: list[list[int]], nrows: int, ncols: int) -> list[int]:
    """In-place fraction-free row echelon reduction.

    Returns the list of pivot columns.  Every entry stays an exact minor of
    the input, so all the divisions below are exact integer divisions.
    """
    piv_cols: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if a[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            a[pr], a[r] = a[r], a[pr]
        arow = a[r]
        pivot = arow[c]
        for i in range(r + 1, nrows):
            row = a[i]
            t = row[c]
            if t:
                for j in range(c + 1, ncols):
                    row[j] = (pivot * row[j] - t * arow[j]) // prev
                row[c] = 0
            elif prev != 1:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = pivot * row[j] // prev
            elif pivot != 1:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = pivot * row[j]
        prev = pivot
        piv_cols.append(c)
        r += 1
    return piv_cols


def rank(m: RationalMatrix) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    a = _integer_rows(m)
    return len(_bareiss_echelon(a, m.rows, m.cols))


def nullspace_basis(m: RationalMatrix) -> list[list[Fraction]]:
    """Exact basis of the right kernel, one vector per free column.

    Each vector is normalized so its first nonzero coordinate is 1, and is
    verified against the original matrix before being returned.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(m.cols):
            v = [Fraction(0)] * m.cols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    a = _integer_rows(m)
    piv_cols = _bareiss_echelon(a, m.rows, m.cols)
    piv_set = set(piv_cols)
    free_cols = [j for j in range(m.cols) if j not in piv_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for i in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[i]
            if pc > fc:
                continue
            row = a[i]
            s = Fraction(0)
            for j in range(pc + 1, fc + 1):
                if row[j] and v[j]:
                    s += row[j] * v[j]
            v[pc] = -s / row[pc]
        lead = next(x for x in v if x)
        if lead != 1:
            v = [x / lead for x in v]
        check = m.apply(v)
        if any(check):
            raise AssertionError("kernel vector failed exact re-check")
        basis.append(v)
    return basis

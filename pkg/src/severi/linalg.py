"""Exact linear algebra over the coefficient fields.

Pivot rule everywhere: scan columns left to right; in each column take the
first remaining row with a nonzero entry.  Over the rationals the forward pass
is fraction-free (Bareiss) on integer rows; finite fields use plain Gauss.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .fields import QQ, Field


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class ExactMatrix:
    field: Field
    rows: tuple

    @classmethod
    def make(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "ExactMatrix":
        rows = tuple(tuple(field(v) for v in r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionError("ragged matrix")
        m = cls(field, rows)
        object.__setattr__(m, "_ncols", ncols if not rows else len(rows[0]))
        return m

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        if self.rows:
            return len(self.rows[0])
        return getattr(self, "_ncols", 0) or 0

    def transpose(self) -> "ExactMatrix":
        if not self.rows:
            return ExactMatrix.make(self.field, [[] for _ in range(self.ncols)])
        return ExactMatrix.make(self.field, list(zip(*self.rows)))

    def __matmul__(self, vec):
        F = self.field
        return [sum((a * b for a, b in zip(r, vec)), F.zero) for r in self.rows]


def _echelon_fraction_free(rows: list[list[Fraction]], ncols: int):
    """Integer Bareiss echelon form; returns (echelon rows as Fractions, pivots)."""
    ints = []
    for r in rows:
        den = lcm(*[v.denominator for v in r]) if r else 1
        ints.append([int(v * den) for v in r])
    m = ints
    nr = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        a = m[r][c]
        for i in range(r + 1, nr):
            b = m[i][c]
            row_i = m[i]
            row_r = m[r]
            new = []
            for j in range(ncols):
                num = a * row_i[j] - b * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("Bareiss division not exact")
                new.append(q)
            m[i] = new
        prev = a
        pivots.append(c)
        r += 1
    return [[Fraction(v) for v in row] for row in m[: len(pivots)]], pivots


def _echelon_gauss(rows: list[list], ncols: int, field: Field):
    m = [list(r) for r in rows]
    nr = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        row_r = m[r]
        for i in range(r + 1, nr):
            b = m[i][c]
            if b:
                m[i] = [x - b * y for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rref(A: ExactMatrix):
    """Reduced row echelon form: (rows, pivot columns)."""
    F = A.field
    n = A.ncols
    if F is QQ:
        ech, piv = _echelon_fraction_free([list(r) for r in A.rows], n)
        ech = [[v / row[c] for v in row] for row, c in zip(ech, piv)]
    else:
        ech, piv = _echelon_gauss(A.rows, n, F)
    # backward elimination
    for k in range(len(piv) - 1, -1, -1):
        c = piv[k]
        for i in range(k):
            b = ech[i][c]
            if b:
                ech[i] = [x - b * y for x, y in zip(ech[i], ech[k])]
    return ech, piv


def mat_rank(A: ExactMatrix) -> int:
    F = A.field
    if A.nrows == 0 or A.ncols == 0:
        return 0
    if F is QQ:
        return len(_echelon_fraction_free([list(r) for r in A.rows], A.ncols)[1])
    return len(_echelon_gauss(A.rows, A.ncols, F)[1])


def kernel_from_rref(ech, piv, ncols: int, field: Field) -> list[list]:
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, c in zip(ech, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def mat_kernel(A: ExactMatrix) -> list[list]:
    """Basis of {v : A v = 0}; vector i has a 1 at the i-th free column."""
    ech, piv = rref(A)
    return kernel_from_rref(ech, piv, A.ncols, A.field)


def free_columns(A: ExactMatrix) -> list[int]:
    _, piv = rref(A)
    return [c for c in range(A.ncols) if c not in set(piv)]


@dataclass(frozen=True)
class AffineSolution:
    consistent: bool
    particular: tuple | None
    kernel: tuple


def solve_affine(A: ExactMatrix, b: Sequence) -> AffineSolution:
    if len(b) != A.nrows:
        raise DimensionError(f"right side has {len(b)} entries, matrix has {A.nrows} rows")
    F = A.field
    aug = ExactMatrix.make(F, [list(r) + [F(v)] for r, v in zip(A.rows, b)])
    ech, piv = rref(aug)
    n = A.ncols
    if n in piv:
        return AffineSolution(False, None, tuple(tuple(v) for v in mat_kernel(A)))
    x = [F.zero] * n
    for row, c in zip(ech, piv):
        x[c] = row[n]
    return AffineSolution(True, tuple(x), tuple(tuple(v) for v in mat_kernel(A)))


def det(A: ExactMatrix):
    if A.nrows != A.ncols:
        raise DimensionError("determinant of a non-square matrix")
    F = A.field
    n = A.nrows
    m = [list(r) for r in A.rows]
    sign = 1
    acc = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        a = m[c][c]
        acc = acc * a
        inv = 1 / a if F is QQ else a.inverse()
        for i in range(c + 1, n):
            b = m[i][c] * inv
            if b:
                m[i] = [x - b * y for x, y in zip(m[i], m[c])]
    return acc * sign

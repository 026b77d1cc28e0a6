"""Dense homogeneous ternary forms and projective points.

Monomials of degree m are ordered graded-lexicographically: exponent triples
(a, b, c) with a + b + c = m, sorted so that (a, b) decreases lexicographically,
starting at x^m and ending at z^m.  For m = 1 this is x, y, z.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import upoly
from .fields import QQ, Field, FieldError


@lru_cache(maxsize=None)
def monomial_basis(m: int) -> tuple[tuple[int, int, int], ...]:
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return tuple((a, b, m - a - b) for a in range(m, -1, -1) for b in range(m - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(m: int) -> dict:
    return {e: i for i, e in enumerate(monomial_basis(m))}


def num_monomials(m: int) -> int:
    return (m + 1) * (m + 2) // 2 if m >= 0 else 0


@lru_cache(maxsize=256)
def _mul_table(a: int, b: int) -> tuple:
    idx = monomial_index(a + b)
    table = []
    for i, (p, q, r) in enumerate(monomial_basis(a)):
        table.append(tuple(idx[(p + s, q + t, r + u)] for (s, t, u) in monomial_basis(b)))
    return tuple(table)


def _powers(v, m):
    out = [None] * (m + 1)
    out[0] = v * 0 + 1
    for i in range(1, m + 1):
        out[i] = out[i - 1] * v
    return out


def monomial_values(coords, m: int) -> list:
    """Values of all degree-m monomials at the given coordinates, in basis order."""
    px, py, pz = (_powers(c, m) for c in coords)
    return [px[a] * py[b] * pz[c] for (a, b, c) in monomial_basis(m)]


class FormError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TernaryForm:
    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != num_monomials(self.degree):
            raise FormError(f"expected {num_monomials(self.degree)} coefficients, got {len(self.coeffs)}")

    # -- construction ---------------------------------------------------
    @classmethod
    def zero(cls, field: Field, degree: int) -> "TernaryForm":
        return cls(field, degree, (field.zero,) * num_monomials(degree))

    @classmethod
    def from_dict(cls, field: Field, degree: int, terms: dict) -> "TernaryForm":
        idx = monomial_index(degree)
        coeffs = [field.zero] * num_monomials(degree)
        for exps, v in terms.items():
            exps = tuple(exps)
            if len(exps) != 3 or sum(exps) != degree or min(exps) < 0:
                raise FormError(f"exponents {exps} do not sum to {degree}")
            coeffs[idx[exps]] = coeffs[idx[exps]] + field(v)
        return cls(field, degree, tuple(coeffs))

    @classmethod
    def monomial(cls, field: Field, exps, coeff=1) -> "TernaryForm":
        return cls.from_dict(field, sum(exps), {tuple(exps): coeff})

    @classmethod
    def constant(cls, field: Field, value) -> "TernaryForm":
        return cls(field, 0, (field(value),))

    def terms(self) -> dict:
        return {e: c for e, c in zip(monomial_basis(self.degree), self.coeffs) if c}

    def coeff(self, exps) -> object:
        return self.coeffs[monomial_index(self.degree)[tuple(exps)]]

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.field is other.field and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, tuple(upoly.sort_key(c) for c in self.coeffs)))

    def proportional_to(self, other: "TernaryForm") -> bool:
        """Equality up to a nonzero scalar."""
        if self.degree != other.degree or self.field is not other.field:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    def normalized(self) -> "TernaryForm":
        """Scale so that the first nonzero coefficient (in basis order) is 1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        inv = 1 / lead if self.field is QQ else lead.inverse()
        return TernaryForm(self.field, self.degree, tuple(c * inv for c in self.coeffs))

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "TernaryForm"):
        if self.field is not other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if isinstance(other, TernaryForm):
            self._check(other)
            if other.degree != self.degree:
                if other.is_zero():
                    return self
                if self.is_zero():
                    return other
                raise FormError(f"cannot add forms of degrees {self.degree} and {other.degree}")
            return TernaryForm(self.field, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        if self.degree == 0:
            return TernaryForm(self.field, 0, (self.coeffs[0] + self.field(other),))
        if not other:
            return self
        raise FormError("cannot add a nonzero constant to a form of positive degree")

    __radd__ = __add__

    def __neg__(self):
        return TernaryForm(self.field, self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, TernaryForm) else -self.field(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TernaryForm":
        c = self.field(c)
        return TernaryForm(self.field, self.degree, tuple(a * c for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(other)
        self._check(other)
        zero = self.field.zero
        out = [zero] * num_monomials(self.degree + other.degree)
        table = _mul_table(self.degree, other.degree)
        ocoeffs = [(j, c) for j, c in enumerate(other.coeffs) if c]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in ocoeffs:
                k = row[j]
                out[k] = out[k] + a * b
        return TernaryForm(self.field, self.degree + other.degree, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise FormError("negative power of a form")
        result = TernaryForm.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus & evaluation -------------------------------------------
    def partial(self, var: int) -> "TernaryForm":
        if self.degree < 1:
            raise FormError("partial derivative of a constant form")
        idx = monomial_index(self.degree - 1)
        out = [self.field.zero] * num_monomials(self.degree - 1)
        for e, c in zip(monomial_basis(self.degree), self.coeffs):
            if c and e[var]:
                lower = list(e)
                lower[var] -= 1
                k = idx[tuple(lower)]
                out[k] = out[k] + c * e[var]
        return TernaryForm(self.field, self.degree - 1, tuple(out))

    def partials(self) -> tuple["TernaryForm", "TernaryForm", "TernaryForm"]:
        return (self.partial(0), self.partial(1), self.partial(2))

    def __call__(self, *coords):
        if len(coords) == 1:
            coords = coords[0]
            if isinstance(coords, ProjPoint):
                if coords.field is not self.field:
                    raise FieldError(f"field mismatch: form over {self.field}, point over {coords.field}")
                coords = coords.coords
        vals = monomial_values(coords, self.degree)
        acc = self.field.zero
        for c, v in zip(self.coeffs, vals):
            if c:
                acc = acc + c * v
        return acc

    def base_change(self, field: Field) -> "TernaryForm":
        if field is self.field:
            return self
        return TernaryForm(field, self.degree, tuple(field(c) for c in self.coeffs))

    def substitute(self, matrix: Sequence[Sequence]) -> "TernaryForm":
        """The form g(v) = f(M v) for a 3x3 matrix M over the same field."""
        F = self.field
        cols = [[F(matrix[r][c]) for r in range(3)] for c in range(3)]
        lin = [TernaryForm(F, 1, tuple(cols[c][r] for c in range(3))) for r in range(3)]
        # lin[r] is the r-th coordinate of M v as a linear form in v
        n = self.degree
        pows = [[TernaryForm.constant(F, 1)] for _ in range(3)]
        for r in range(3):
            for _ in range(n):
                pows[r].append(pows[r][-1] * lin[r])
        out = TernaryForm.zero(F, n)
        for (a, b, c), coef in zip(monomial_basis(n), self.coeffs):
            if coef:
                out = out + (pows[0][a] * pows[1][b] * pows[2][c]).scale(coef)
        return out

    def restrict_to_line(self, P, Q) -> list:
        """Binary form f(s P + t Q) as coefficient list in t after setting s = 1.

        Returned as a univariate polynomial in t (low degree first) of formal
        degree n; the coefficient of t^n is f(Q).
        """
        F = self.field
        n = self.degree
        lp = [TernaryForm.constant(F, 1)]
        # linear forms in (s, t) encoded as ternary forms in (s, t, 0)
        coords = []
        for i in range(3):
            coords.append(TernaryForm(F, 1, (F(P[i]), F(Q[i]), F.zero)))
        pw = [[lp[0]] for _ in range(3)]
        for i in range(3):
            for _ in range(n):
                pw[i].append(pw[i][-1] * coords[i])
        total = TernaryForm.zero(F, n)
        for (a, b, c), coef in zip(monomial_basis(n), self.coeffs):
            if coef:
                total = total + (pw[0][a] * pw[1][b] * pw[2][c]).scale(coef)
        # coefficient of s^(n-j) t^j
        return [total.coeff((n - j, j, 0)) for j in range(n + 1)]

    def dehomogenize_y(self, x_val, z_val) -> list:
        """Univariate polynomial in y obtained by fixing x and z (low degree first)."""
        n = self.degree
        F = self.field
        px = _powers(F(x_val), n)
        pz = _powers(F(z_val), n)
        out = [F.zero] * (n + 1)
        for (a, b, c), coef in zip(monomial_basis(n), self.coeffs):
            if coef:
                out[b] = out[b] + coef * px[a] * pz[c]
        return out

    # -- display ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"TernaryForm({self.field}, {self})"

    def __str__(self) -> str:
        parts = []
        for (a, b, c), coef in zip(monomial_basis(self.degree), self.coeffs):
            if not coef:
                continue
            mon = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in (("x", a), ("y", b), ("z", c)) if e
            )
            cs = self.field.format(coef) if self.field is not QQ else str(coef)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            else:
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts) if parts else "0"


def coordinate_forms(field: Field) -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    """The linear forms x, y, z; handy for building equations with operators."""
    return tuple(TernaryForm.monomial(field, e) for e in monomial_basis(1))


def form_eval(f: TernaryForm, P: "ProjPoint"):
    return f(P)


def form_partials(f: TernaryForm):
    return f.partials()


def line_through(P: "ProjPoint", Q: "ProjPoint") -> TernaryForm:
    """The linear form vanishing at two distinct points (cross product)."""
    a, b = P.coords, Q.coords
    c = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    form = TernaryForm(P.field, 1, c)
    if form.is_zero():
        raise FormError("points coincide")
    return form.normalized()


class PointError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point of P^2, normalized so that its last nonzero coordinate is 1."""

    field: Field
    coords: tuple

    @classmethod
    def make(cls, field: Field, coords: Iterable) -> "ProjPoint":
        c = [field(v) for v in coords]
        if len(c) != 3:
            raise PointError("a projective point needs three coordinates")
        last = next((v for v in reversed(c) if v), None)
        if last is None:
            raise PointError("(0:0:0) is not a projective point")
        inv = 1 / last if field is QQ else last.inverse()
        return cls(field, tuple(v * inv for v in c))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(upoly.sort_key(c) for c in self.coords))

    def __getitem__(self, i):
        return self.coords[i]

    def base_change(self, field: Field) -> "ProjPoint":
        if field is self.field:
            return self
        return ProjPoint(field, tuple(field(c) for c in self.coords))

    def sort_key(self):
        return tuple(upoly.sort_key(c) for c in reversed(self.coords))

    def __repr__(self) -> str:
        return "(" + ":".join(self.field.format(c) for c in self.coords) + ")"


def point(field: Field, *coords) -> ProjPoint:
    return ProjPoint.make(field, coords)


def apply_matrix(M, P: ProjPoint) -> ProjPoint:
    F = P.field
    c = P.coords
    return ProjPoint.make(F, [sum((F(M[r][j]) * c[j] for j in range(3)), F.zero) for r in range(3)])

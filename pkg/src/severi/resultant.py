"""Sylvester resultants of polynomials whose coefficients are ternary forms.

The elimination runs on sparse polynomials in x, y, z (dicts from exponent
triples to coefficients) because intermediate Bareiss entries need not be
homogeneous; the final determinant is converted back to a TernaryForm.

Convention: rows of the Sylvester matrix list coefficients in ascending powers
of the eliminated variable, so Res(u - a, u - b) = b - a.  This differs from the
descending convention by the sign (-1)^(N(N-1)/2), N = deg P + deg Q.
"""
from __future__ import annotations

from typing import Sequence

from .fields import Field
from .forms import FormError, TernaryForm, monomial_basis

Poly3 = dict


def _lead(p: Poly3):
    return max(p, key=lambda e: (sum(e), e))


def p_add(a: Poly3, b: Poly3) -> Poly3:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        v = c if v is None else v + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def p_neg(a: Poly3) -> Poly3:
    return {e: -c for e, c in a.items()}


def p_mul(a: Poly3, b: Poly3) -> Poly3:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            v = out.get(e)
            t = c1 * c2
            out[e] = t if v is None else v + t
    return {e: c for e, c in out.items() if c}


def p_exact_div(a: Poly3, b: Poly3) -> Poly3:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    lb = _lead(b)
    cb = b[lb]
    inv = cb.inverse() if hasattr(cb, "inverse") else 1 / cb
    rem = dict(a)
    q: dict = {}
    while rem:
        lr = _lead(rem)
        d = (lr[0] - lb[0], lr[1] - lb[1], lr[2] - lb[2])
        if min(d) < 0:
            raise ArithmeticError("inexact multivariate division")
        c = rem[lr] * inv
        q[d] = c
        rem = p_add(rem, p_neg(p_mul({d: c}, b)))
    return q


def from_form(f: TernaryForm) -> Poly3:
    return {e: c for e, c in zip(monomial_basis(f.degree), f.coeffs) if c}


def to_form(p: Poly3, field: Field, degree: int | None = None) -> TernaryForm:
    if not p:
        return TernaryForm.zero(field, degree or 0)
    degs = {sum(e) for e in p}
    if len(degs) != 1:
        raise FormError("resultant is not homogeneous")
    d = degs.pop()
    if degree is not None and d != degree:
        raise FormError(f"resultant has degree {d}, expected {degree}")
    return TernaryForm.from_dict(field, d, p)


def det_poly3(mat: list[list[Poly3]]) -> Poly3:
    """Fraction-free (Bareiss) determinant over the polynomial ring."""
    m = [list(r) for r in mat]
    n = len(m)
    if n == 0:
        return None
    sign = 1
    prev = None
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return {}
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            aik = m[i][k]
            for j in range(k + 1, n):
                t = p_add(p_mul(akk, m[i][j]), p_neg(p_mul(aik, m[k][j])))
                m[i][j] = p_exact_div(t, prev) if prev is not None else t
            m[i][k] = {}
        prev = akk
    d = m[n - 1][n - 1]
    return d if sign == 1 else p_neg(d)


def sylvester_resultant(P: Sequence[TernaryForm], Q: Sequence[TernaryForm]) -> TernaryForm:
    """Resultant in u of P = sum P[i] u^i and Q = sum Q[j] u^j.

    Leading coefficients must be nonzero forms.  The result is the Sylvester
    determinant (ascending convention, see module docstring).
    """
    if not P or not Q or all(c.is_zero() for c in P) or all(c.is_zero() for c in Q):
        raise ValueError("resultant of a zero polynomial")
    if P[-1].is_zero() or Q[-1].is_zero():
        raise ValueError("leading coefficients must be nonzero forms")
    field = P[0].field
    for c in list(P) + list(Q):
        if c.field is not field:
            raise ValueError("coefficients over different fields")
    dp, dq = len(P) - 1, len(Q) - 1
    size = dp + dq
    if size == 0:
        return TernaryForm.constant(field, 1)
    pp = [from_form(c) for c in P]
    qq = [from_form(c) for c in Q]
    rows = []
    for i in range(dq):
        row = [{} for _ in range(size)]
        for j, c in enumerate(pp):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [{} for _ in range(size)]
        for j, c in enumerate(qq):
            row[i + j] = c
        rows.append(row)
    return to_form(det_poly3(rows), field)

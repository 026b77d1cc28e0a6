"""Univariate polynomials over any exact field, as coefficient lists (low degree first).

Used for restrictions of forms to lines and fibres, where coefficients may lie
in an extension field.  Root finding over finite fields is Cantor-Zassenhaus.
"""
from __future__ import annotations

import random

from . import fpx
from .fields import ExtensionField, Field, FieldError, FpElem, FqElem, PrimeField


def trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return trim(out)


def sub(a, b):
    out = list(a) + [None] * max(0, len(b) - len(a))
    for i in range(len(out)):
        if out[i] is None:
            out[i] = -b[i]
        elif i < len(b):
            out[i] = out[i] - b[i]
    return trim(out)


def scale(a, c):
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            t = x * y
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = a[0] * 0
    return trim([zero if v is None else v for v in out])


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lead_inv = 1 / b[-1] if not hasattr(b[-1], "inverse") else b[-1].inverse()
    if len(a) <= db:
        return [], trim(a)
    q = [a[0] * 0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * lead_inv
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = a[k - db + j] - c * b[j]
    return trim(q), trim(a[:db])


def rem(a, b):
    return divmod_(a, b)[1]


def exact_div(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a):
    if not a:
        return []
    inv = 1 / a[-1] if not hasattr(a[-1], "inverse") else a[-1].inverse()
    return [x * inv for x in a]


def gcd(a, b):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def deriv(a):
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a, x):
    if not a:
        return x * 0
    v = a[-1]
    for c in reversed(a[:-1]):
        v = v * x + c
    return v


def powmod(base, e, mod):
    one = mod[-1] * 0 + 1
    result = [one]
    base = rem(base, mod)
    while e:
        if e & 1:
            result = rem(mul(result, base), mod)
        e >>= 1
        if e:
            base = rem(mul(base, base), mod)
    return result


def squarefree_part(f):
    f = monic(trim(list(f)))
    if len(f) <= 2:
        return f
    g = gcd(f, deriv(f))
    return exact_div(f, g) if len(g) > 1 else f


def _in_prime_subfield(f) -> bool:
    return all(isinstance(c, FqElem) and c.in_prime_field() for c in f)


def _frobenius_x(f, field):
    """x^q modulo f for q = |field|, via repeated p-th powers."""
    one = field.one
    r = [field.zero, one]
    e = field.e if isinstance(field, ExtensionField) else 1
    for _ in range(e):
        r = powmod(r, field.p, f)
    return r


def splits(f, field: Field) -> bool:
    """True when every root of f (over the algebraic closure) lies in ``field``."""
    f = squarefree_part(f)
    if len(f) <= 2:
        return True
    x = [field.zero, field.one]
    g = gcd(f, sub(_frobenius_x(f, field), x))
    return len(g) == len(f)


def _cz_split(f, field, rng):
    """Split a monic squarefree product of linear factors over a finite field."""
    n = len(f) - 1
    if n == 1:
        return [-f[0]]
    q = field.order
    if q % 2 == 0:
        return [a for a in field.elements() if not evaluate(f, a)]
    exp = (q - 1) // 2
    while True:
        r = field.random(rng)
        w = sub(powmod([r, field.one], exp, f), [field.one])
        g = gcd(f, w)
        if 1 < len(g) < len(f):
            return _cz_split(g, field, rng) + _cz_split(exact_div(f, g), field, rng)


def roots(f, field: Field) -> list:
    """Distinct roots of f lying in the finite field ``field`` (sorted canonically)."""
    f = trim([field(c) for c in f])
    if not f:
        raise ValueError("roots of the zero polynomial")
    if len(f) == 1:
        return []
    if not field.is_finite:
        if len(f) == 2:
            return [-f[0] / f[1]]
        raise FieldError("root finding over the rationals is limited to degree 1")
    f = monic(f)
    if len(f) == 2:
        return [-f[0]]
    p = field.p
    rng = random.Random(len(f) * 7919 + p)
    if isinstance(field, PrimeField):
        ints = [c.v for c in f]
        return [field(r) for r in fpx.roots_in_prime_field(ints, p)]
    if _in_prime_subfield(f) and p > 2:
        ints = [c.c[0] for c in f]
        factors, _ = fpx.split_over(ints, p, field.e)
        out = []
        for fac in factors:
            d = len(fac) - 1
            if d == 1:
                out.append(field(-fac[0] % p))
                continue
            lifted = [field(c) for c in fac]
            r0 = _cz_split_one(lifted, field, rng)
            r = r0
            for _ in range(d):
                out.append(r)
                r = r ** p
        return sorted(set(out), key=lambda a: a.c)
    f = squarefree_part(f)
    x = [field.zero, field.one]
    g = gcd(f, sub(_frobenius_x(f, field), x))
    if len(g) <= 1:
        return []
    return sorted(set(_cz_split(g, field, rng)), key=lambda a: a.c)


def _cz_split_one(f, field, rng):
    """One root in ``field`` of a polynomial that splits there."""
    f = monic(f)
    x = [field.zero, field.one]
    g = gcd(f, sub(_frobenius_x(f, field), x))
    while len(g) > 2:
        r = field.random(rng)
        w = sub(powmod([r, field.one], (field.order - 1) // 2, g), [field.one])
        h = gcd(g, w)
        if 1 < len(h) < len(g):
            g = h if len(h) <= len(g) - len(h) + 1 else exact_div(g, h)
    if len(g) != 2:
        raise ArithmeticError("polynomial has no root in " + str(field))
    return -g[0]


def sort_key(a):
    if isinstance(a, FpElem):
        return (a.v,)
    if isinstance(a, FqElem):
        return a.c
    return (a,)

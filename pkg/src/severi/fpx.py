"""Dense univariate polynomials over F_p on plain int lists (low degree first).

This is the hot kernel behind singular-point elimination and extension-field
moduli; everything here works on lists of residues in [0, p) and never
allocates field element objects.  The zero polynomial is the empty list.
"""
from __future__ import annotations

import random


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def norm(a, p: int) -> list[int]:
    return trim([x % p for x in a])


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return trim(out)


def scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % p for v in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) <= db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def exact_div(a, b, p):
    q, r = divmod_(a, b, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a, p):
    if not a:
        return []
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    a, b = norm(a, p), norm(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g (g not normalized)."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    return r0, s0, t0


def deriv(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def evaluate(a, x, p):
    v = 0
    for c in reversed(a):
        v = (v * x + c) % p
    return v


def powmod(base, e, mod, p):
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), mod, p)
    return result


def frobenius_power(mod, times, p):
    """x^(p^times) reduced modulo ``mod``."""
    r = [0, 1]
    for _ in range(times):
        r = powmod(r, p, mod, p)
    return r


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p) -> bool:
    """Rabin's test for a polynomial of degree >= 1."""
    f = monic(norm(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if sub(frobenius_power(f, n, p), x, p):
        return False
    for q in _prime_divisors(n):
        h = sub(frobenius_power(f, n // q, p), x, p)
        if len(gcd(f, h, p)) != 1:
            return False
    return True


def squarefree_part(f, p):
    """Product of the distinct irreducible factors (assumes deg f < p)."""
    f = monic(norm(f, p), p)
    if len(f) <= 2:
        return f
    g = gcd(f, deriv(f, p), p)
    return exact_div(f, g, p) if len(g) > 1 else f


def split_over(f, p, e):
    """Irreducible factors of the squarefree part of f whose degree divides e.

    Returns (factors, splits) where ``splits`` tells whether every root of f in
    the algebraic closure lies in F_{p^e}.
    """
    f = squarefree_part(f, p)
    if len(f) <= 1:
        return [], True
    x = [0, 1]
    g = gcd(f, sub(frobenius_power(f, e, p), x, p), p)
    splits = len(g) == len(f)
    factors = []
    # distinct-degree factorization of g
    h = [0, 1]
    rest = g
    i = 0
    while len(rest) > 1:
        i += 1
        if 2 * i > len(rest) - 1:
            factors.extend(_edf(rest, len(rest) - 1, p))
            break
        h = powmod(h, p, rest, p)
        part = gcd(rest, sub(h, x, p), p)
        if len(part) > 1:
            factors.extend(_edf(part, i, p))
            rest = exact_div(rest, part, p)
            h = rem(h, rest, p)
    return factors, splits


def _edf(f, d, p, rng=None):
    """Equal-degree splitting (Cantor-Zassenhaus, p odd) of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    if rng is None:
        rng = random.Random(n * 1000003 + d)
    if p == 2:
        raise ArithmeticError("equal-degree splitting needs odd characteristic")
    exp = (p ** d - 1) // 2
    while True:
        r = trim([rng.randrange(p) for _ in range(n)])
        if len(r) < 2:
            continue
        g = gcd(f, r, p)
        if 1 < len(g) < len(f):
            break
        w = sub(powmod(r, exp, f, p), [1], p)
        g = gcd(f, w, p)
        if 1 < len(g) < len(f):
            break
    return _edf(g, d, p, rng) + _edf(exact_div(f, g, p), d, p, rng)


def roots_in_prime_field(f, p):
    factors, _ = split_over(f, p, 1)
    return sorted((-fac[0]) % p for fac in factors)


# -- matrices of polynomials ------------------------------------------------


def det_bareiss(mat, p):
    """Determinant of a square matrix with F_p[x] entries (fraction-free)."""
    m = [[list(e) for e in row] for row in mat]
    n = len(m)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return []
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        mk = m[k]
        akk = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            aik = mi[k]
            for j in range(k + 1, n):
                t = sub(mul(akk, mi[j], p), mul(aik, mk[j], p), p)
                mi[j] = exact_div(t, prev, p) if len(prev) > 1 else scale(t, pow(prev[0], -1, p), p)
            mi[k] = []
        prev = akk
    d = m[n - 1][n - 1]
    return scale(d, sign, p)


def sylvester(a, b):
    """Sylvester matrix of two polynomials in y whose coefficients are F_p[x] lists.

    ``a`` and ``b`` are lists of coefficients, low degree first; their formal
    degrees are len(a)-1 and len(b)-1 (leading coefficients may vanish).
    """
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    rows = []
    for i in range(db):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant_y(a, b, p):
    """Res_y(a, b) for polynomials in y with F_p[x] coefficients."""
    if len(a) - 1 + len(b) - 1 == 0:
        return [1]
    return det_bareiss(sylvester(a, b), p)

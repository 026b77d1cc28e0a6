"""Exact coefficient fields: the rationals, prime fields and their small extensions.

Rational elements are plain :class:`fractions.Fraction` values.  Finite field
elements are small immutable objects that remember their field, so mixing
elements of different fields raises instead of silently producing garbage.

An extension F_{p^e} is built on one fixed modulus per (p, e): the least monic
irreducible polynomial of degree e, where candidates x^e + c_{e-1} x^{e-1} + ...
+ c_0 are compared as tuples (c_{e-1}, ..., c_0).  Elements are stored as
coefficient tuples (a_0, ..., a_{e-1}) in the basis 1, w, ..., w^{e-1}.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import fpx


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for 64-bit inputs, probabilistic beyond
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor of a field: ``kind`` is "rationals" or "prime-field"."""

    kind: str
    p: int | None = None
    ext_degree: int = 1

    def __str__(self) -> str:
        if self.kind == "rationals":
            return "QQ"
        if self.ext_degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.ext_degree})"


class Field:
    """Common interface.  Subclasses are singletons per spec (see :func:`field_from_spec`)."""

    spec: FieldSpec
    zero: object
    one: object

    @property
    def characteristic(self) -> int:
        return 0 if self.spec.kind == "rationals" else self.spec.p

    @property
    def is_finite(self) -> bool:
        return self.spec.kind != "rationals"

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def __repr__(self) -> str:
        return str(self.spec)


class Rationals(Field):
    def __init__(self):
        self.spec = FieldSpec("rationals")
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, (FpElem, FqElem)):
            raise FieldError(f"cannot coerce {value!r} into QQ")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational number: {text!r}") from exc

    def format(self, a) -> str:
        return str(Fraction(a))

    def random(self, rng: random.Random, bound: int = 20) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def contains(self, a) -> bool:
        return isinstance(a, (int, Fraction))


# --------------------------------------------------------------------------
# prime fields


class FpElem:
    __slots__ = ("field", "v")

    def __init__(self, field: "PrimeField", v: int):
        self.field = field
        self.v = v

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.field is not self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.v
        if isinstance(other, int):
            return other % self.field.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.field.p) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.field, (self.v + o) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.field, (self.v - o) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.field, (o - self.v) % self.field.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.field, self.v * o % self.field.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(self.field, -self.v % self.field.p)

    def inverse(self) -> "FpElem":
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self.field))
        return FpElem(self.field, pow(self.v, -1, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in " + str(self.field))
        return FpElem(self.field, self.v * pow(o, -1, self.field.p) % self.field.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.field, o) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElem(self.field, pow(self.v, e, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return other.field is self.field and other.v == self.v
        if isinstance(other, int):
            return self.v == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.spec = FieldSpec("prime-field", p, 1)
        self.order = p
        self.zero = FpElem(self, 0)
        self.one = FpElem(self, 1)

    def __call__(self, value) -> FpElem:
        if isinstance(value, FpElem):
            if value.field is not self:
                raise FieldError(f"field mismatch: {value.field} vs {self}")
            return value
        if isinstance(value, int):
            return FpElem(self, value % self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} has no image in {self}")
            return FpElem(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> FpElem:
        try:
            return self(Fraction(str(text).strip()))
        except ValueError as exc:
            raise FieldError(f"not a residue: {text!r}") from exc

    def format(self, a) -> str:
        return str(self(a).v)

    def random(self, rng: random.Random) -> FpElem:
        return FpElem(self, rng.randrange(self.p))

    def contains(self, a) -> bool:
        return isinstance(a, FpElem) and a.field is self

    def elements(self) -> Iterator[FpElem]:
        for v in range(self.p):
            yield FpElem(self, v)


# --------------------------------------------------------------------------
# extension fields


class FqElem:
    __slots__ = ("field", "c")

    def __init__(self, field: "ExtensionField", c: tuple):
        self.field = field
        self.c = c

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.c
        try:
            return self.field(other).c
        except FieldError:
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((b - a) % p for a, b in zip(self.c, o)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FqElem(self.field, self.field._mul(self.c, o))

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.c))

    def inverse(self) -> "FqElem":
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero in " + str(self.field))
        return FqElem(self.field, self.field._inv(self.c))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * FqElem(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FqElem(self.field, o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one.c
        base = self.c
        mul = self.field._mul
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return FqElem(self.field, result)

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return other.field is self.field and other.c == self.c
        try:
            return self.c == self.field(other).c
        except FieldError:
            return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash((self.field.p, self.c[0]))
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def in_prime_field(self) -> bool:
        return not any(self.c[1:])

    def __repr__(self):
        if self.in_prime_field():
            return str(self.c[0])
        terms = []
        for i, a in enumerate(self.c):
            if a:
                mon = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
                if i == 0:
                    terms.append(str(a))
                else:
                    terms.append(mon if a == 1 else f"{a}*{mon}")
        return "(" + "+".join(terms) + ")"


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Least monic irreducible of degree e over F_p, as low-to-high coefficients."""
    if e == 1:
        return (0, 1)
    # candidates ordered by (c_{e-1}, ..., c_0)
    for idx in range(p ** e):
        digits = []
        r = idx
        for _ in range(e):
            digits.append(r % p)
            r //= p
        # digits[0] is the least significant position, i.e. c_0
        poly = digits + [1]
        if poly[0] == 0:
            continue
        if fpx.is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


class ExtensionField(Field):
    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 2:
            raise FieldError("extension degree must be at least 2")
        self.p = p
        self.e = e
        self.spec = FieldSpec("prime-field", p, e)
        self.order = p ** e
        self.modulus = least_irreducible(p, e)
        self.base = prime_field(p)
        self.zero = FqElem(self, (0,) * e)
        self.one = FqElem(self, (1,) + (0,) * (e - 1))
        self.gen = FqElem(self, (0, 1) + (0,) * (e - 2))

    def _mul(self, a: tuple, b: tuple) -> tuple:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        mod = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(e):
                    prod[k - e + j] -= c * mod[j]
        return tuple(x % p for x in prod[:e])

    def _inv(self, a: tuple) -> tuple:
        g, s, _ = fpx.xgcd(fpx.trim(list(a)), list(self.modulus), self.p)
        if len(g) != 1:
            raise ZeroDivisionError("element not invertible")
        inv_g = pow(g[0], -1, self.p)
        s = [x * inv_g % self.p for x in s]
        return tuple(s + [0] * (self.e - len(s)))

    def __call__(self, value) -> FqElem:
        if isinstance(value, FqElem):
            if value.field is not self:
                raise FieldError(f"field mismatch: {value.field} vs {self}")
            return value
        if isinstance(value, FpElem):
            if value.field.p != self.p:
                raise FieldError(f"field mismatch: {value.field} vs {self}")
            return FqElem(self, (value.v,) + (0,) * (self.e - 1))
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.e - 1))
        if isinstance(value, Fraction):
            return self(self.base(value))
        if isinstance(value, (tuple, list)):
            if len(value) != self.e:
                raise FieldError(f"expected {self.e} coordinates, got {len(value)}")
            return FqElem(self, tuple(int(x) % self.p for x in value))
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> FqElem:
        parts = str(text).split(",")
        if len(parts) == 1:
            return self(self.base.parse(parts[0]))
        try:
            return self([int(x) for x in parts])
        except ValueError as exc:
            raise FieldError(f"not an element of {self}: {text!r}") from exc

    def format(self, a) -> str:
        a = self(a)
        if a.in_prime_field():
            return str(a.c[0])
        return ",".join(str(x) for x in a.c)

    def random(self, rng: random.Random) -> FqElem:
        return FqElem(self, tuple(rng.randrange(self.p) for _ in range(self.e)))

    def contains(self, a) -> bool:
        return isinstance(a, FqElem) and a.field is self

    def frobenius(self, a: FqElem, times: int = 1) -> FqElem:
        return a ** (self.p ** times)

    def elements(self) -> Iterator[FqElem]:
        for idx in range(self.order):
            c = []
            for _ in range(self.e):
                c.append(idx % self.p)
                idx //= self.p
            yield FqElem(self, tuple(c))


QQ = Rationals()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def extension_field(p: int, e: int) -> Field:
    if e == 1:
        return prime_field(p)
    return ExtensionField(p, e)


def GF(p: int, e: int = 1) -> Field:
    return extension_field(p, e)


def field_from_spec(spec: FieldSpec) -> Field:
    if spec.kind == "rationals":
        return QQ
    if spec.kind == "prime-field":
        if spec.p is None:
            raise FieldError("prime field needs p")
        return extension_field(spec.p, spec.ext_degree)
    raise FieldError(f"unknown field kind {spec.kind!r}")


def embed(a, target: Field):
    """Map an element of the prime field (or of ``target`` itself) into ``target``."""
    return target(a)


def in_subfield(a, degree: int) -> bool:
    """True when an element of F_{p^e} lies in the subfield F_{p^degree}."""
    if isinstance(a, FqElem):
        return a ** (a.field.p ** degree) == a
    return True


def sqrt(a, field: Field):
    """A square root of ``a`` in ``field`` or None."""
    from .upoly import roots

    a = field(a)
    if not a:
        return field.zero
    if field is QQ:
        num, den = a.numerator, a.denominator
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)
    r = roots([-a, field.zero, field.one], field)
    return r[0] if r else None


def _isqrt_exact(n: int):
    if n < 0:
        return None
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None

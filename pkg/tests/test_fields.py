from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from severi.fields import GF, QQ, FieldError, in_subfield, is_prime, least_irreducible, sqrt
from severi import fpx

F31 = GF(31)
F961 = GF(31, 2)


def test_small_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_extension_modulus_is_least_irreducible():
    # x^2 + 1 is irreducible mod 31 because 31 = 3 mod 4, and nothing smaller in the order is
    assert F961.modulus == (1, 0, 1)
    assert least_irreducible(5, 2) == (2, 0, 1)  # x^2 + 2; x^2 + 1 has roots 2, 3 mod 5
    assert least_irreducible(2, 3) == (1, 1, 0, 1)


def test_generator_squares_to_minus_one():
    i = F961.gen
    assert i * i == F961(-1)
    assert F961.format(i) == "0,1"
    assert F961.parse("0,1") == i


@given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 30), st.integers(0, 30))
def test_extension_field_axioms(a, b, c, d):
    x, y = F961((a, b)), F961((c, d))
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    # Frobenius is additive and fixes the prime field
    assert F961.frobenius(x + y) == F961.frobenius(x) + F961.frobenius(y)
    assert F961.frobenius(F961(a)) == F961(a)


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_rationals_into_prime_field(n, m):
    if m % 31 == 0:
        return
    assert F31(Fraction(n, m)) * F31(m) == F31(n)


def test_parse_errors():
    with pytest.raises(FieldError):
        QQ.parse("1/0x")
    with pytest.raises(FieldError):
        F961.parse("1,2,3")


def test_subfield_membership():
    assert in_subfield(F961(7), 1)
    assert not in_subfield(F961.gen, 1)


def test_square_roots():
    assert sqrt(Fraction(9, 4), QQ) == Fraction(3, 2)
    assert sqrt(2, QQ) is None
    r = sqrt(-1, F31)
    assert r is None  # -1 is not a square mod 31
    r = sqrt(-1, F961)
    assert r * r == F961(-1)


@given(st.lists(st.integers(0, 30), min_size=1, max_size=6), st.lists(st.integers(0, 30), min_size=1, max_size=6))
def test_fpx_divmod(a, b):
    b = fpx.trim(b)
    if not b:
        return
    q, r = fpx.divmod_(a, b, 31)
    assert fpx.add(fpx.mul(q, b, 31), r, 31) == fpx.norm(a, 31)
    assert len(r) < len(b)


def test_fpx_split_over_extension():
    # x^2 + 1 has no root mod 31 but splits in F_{31^2}
    assert fpx.roots_in_prime_field([1, 0, 1], 31) == []
    factors, splits = fpx.split_over([1, 0, 1], 31, 2)
    assert splits and len(factors) == 1

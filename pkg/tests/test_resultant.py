from severi.fields import GF, QQ
from severi.forms import TernaryForm, coordinate_forms
from severi.resultant import sylvester_resultant

X, Y, Z = coordinate_forms(QQ)


def const(c):
    return TernaryForm.constant(QQ, c)


def test_linear_pair():
    # Res(u - a, u - b) = b - a in the ascending convention
    assert sylvester_resultant([-X, const(1)], [-Y, const(1)]) == Y - X


def test_square_of_difference():
    # Res((u - a)^2, u - b) = (a - b)^2
    P = [X * X, (X + X).scale(-1), const(1)]
    Q = [-Y, const(1)]
    assert sylvester_resultant(P, Q) == (X - Y) * (X - Y)


def test_product_of_values_up_to_sign():
    # monic P with roots 1, 2; Q = u^2 + 3: descending Res = Q(1) Q(2) = 4 * 7
    P = [const(2), const(-3), const(1)]
    Q = [const(3), const(0), const(1)]
    r = sylvester_resultant(P, Q)
    # ascending convention differs by (-1)^(N(N-1)/2) with N = 4
    assert r == const(28)


def test_over_finite_field():
    F = GF(31)
    x, y, z = coordinate_forms(F)
    one = TernaryForm.constant(F, 1)
    assert sylvester_resultant([-x, one], [-z, one]) == z - x

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from severi.constructions import (ConstructionError, cross_ratio, curve_with_prescribed_singularities,
                                  general_points, implicitize_rational_curve, j_invariant,
                                  pencil_cross_ratio_check, quintic_3cusps, random_pencil_trial,
                                  singularity_conditions, tricuspidal_quartic, union_with_conic,
                                  union_with_line, zariski_sextic)
from severi.curves import CurveError, evaluation_matrix, points_position
from severi.fields import GF, QQ
from severi.forms import TernaryForm, coordinate_forms, line_through, point
from severi.linalg import mat_kernel

F = GF(31)
x, y, z = coordinate_forms(F)
X, Y, Z = coordinate_forms(QQ)


# ---------------------------------------------------------------------------
# gallery curves


def test_tricuspidal_quartic_over_rationals():
    a = tricuspidal_quartic(QQ)
    assert (a.k, a.d, a.genus, a.irreducibility) == (3, 0, 0, "certified")
    assert points_position(a.points, 1).rank == 3


def test_tricuspidal_quartic_small_characteristic():
    with pytest.raises(CurveError):
        tricuspidal_quartic(GF(3))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_zariski_sextic(seed):
    z6 = zariski_sextic(F, seed=seed)
    a = z6.analysis
    assert (a.k, a.d, a.genus) == (6, 0, 4)
    assert not points_position(a.points, 2).independent
    for P in a.points:
        rest = [Q for Q in a.points if Q != P]
        assert points_position(rest, 2).independent


def test_zariski_sextic_rejects_points_off_the_conic():
    conic = x * z - y * y
    pts = [point(F, 1, u, u * u) for u in range(5)] + [point(F, 1, 1, 2)]
    with pytest.raises(ConstructionError):
        zariski_sextic(F, conic, pts)


@pytest.mark.parametrize("seed", [0, 1])
def test_quintic_with_three_cusps(seed):
    q = quintic_3cusps(GF(101), seed=seed)
    assert q.explicit.degree == 5
    assert (q.explicit.k, q.explicit.d, q.explicit.genus) == (3, 3, 0)
    assert (q.model.k, q.model.d, q.model.genus) == (3, 0, 3)
    assert len(q.model.smoothed) == 3
    assert points_position(q.model.points, 1).rank == 3


def test_quintic_rejects_repeated_parameters():
    with pytest.raises(ConstructionError):
        quintic_3cusps(GF(101), parameters=(1, 1, 2))


# ---------------------------------------------------------------------------
# prescribed singularities


def test_four_nodes_on_a_sextic():
    r = curve_with_prescribed_singularities(6, general_points(4, F, seed=0), [], F, seed=0)
    assert r.solution_dim == 28 - 12
    assert (r.analysis.k, r.analysis.d, r.analysis.genus) == (0, 4, 6)


def test_cuspidal_cubic_is_in_the_family():
    M = singularity_conditions(3, [], [(point(F, 0, 0, 1), y)], F)
    f = z * y * y - x ** 3
    assert all(not sum((a * b for a, b in zip(row, f.coeffs)), F.zero) for row in M.rows)
    r = curve_with_prescribed_singularities(3, [], [(point(F, 0, 0, 1), y)], F, seed=0)
    assert r.solution_dim == 10 - 5
    assert r.analysis.k == 1 and r.analysis.cusps[0].tangents[0].proportional_to(y)


def test_six_general_cusps_are_impossible():
    rng = random.Random(1)
    cusps = []
    for P in general_points(6, F, seed=1):
        Q = P
        while Q == P:
            Q = point(F, *[rng.randrange(1, 31) for _ in range(3)])
        cusps.append((P, line_through(P, Q)))
    with pytest.raises(ConstructionError, match="empty"):
        curve_with_prescribed_singularities(6, [], cusps, F)


def test_prescribed_points_must_be_distinct():
    P = point(F, 1, 2, 3)
    with pytest.raises(ConstructionError):
        curve_with_prescribed_singularities(5, [P, P], [], F)


def test_tangent_must_pass_through_the_cusp():
    with pytest.raises(ConstructionError):
        curve_with_prescribed_singularities(4, [], [(point(F, 0, 0, 1), z)], F)


# ---------------------------------------------------------------------------
# unions


@pytest.fixture(scope="module")
def sextic():
    return zariski_sextic(F, seed=0).analysis


def _rational_smooth_points(a):
    f = a.curve
    return [point(F, u, v, 1) for u in range(31) for v in range(31)
            if not f(point(F, u, v, 1)) and point(F, u, v, 1) not in a.points]


def test_union_with_line(sextic):
    pts = _rational_smooth_points(sextic)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            try:
                U = union_with_line(sextic, line_through(pts[i], pts[j]), [pts[i], pts[j]])
            except CurveError:
                continue
            assert U.bookkeeping == (7, 6, 4)
            assert U.criterion_degree == -1 and U.criterion_holds
            assert U.genus == sextic.genus + 2 - 1
            assert U.arithmetic_consistent()
            ua = U.union_analysis()
            assert (ua.k, ua.d, ua.irreducibility) == (6, 4, "reducible-by-construction")
            with pytest.raises(ConstructionError):
                union_with_line(sextic, U.components[1], [pts[i]])
            return
    pytest.fail("no transversal line found")


def test_union_with_conic():
    a = tricuspidal_quartic(F)
    pts = _rational_smooth_points(a)
    rng = random.Random(0)
    for _ in range(200):
        marked = rng.sample(pts, 5)
        (v,) = mat_kernel(evaluation_matrix(marked, 2)) or [None]
        if v is None:
            continue
        C = TernaryForm(F, 2, tuple(v))
        try:
            U = union_with_conic(a, C, marked)
        except CurveError:
            continue
        assert U.bookkeeping == (6, 3, 3)
        assert U.criterion_degree == 4 - 5
        assert U.genus == 0 + 5 - 1
        with pytest.raises(ConstructionError):
            union_with_conic(a, C, marked[:4])
        return
    pytest.fail("no transversal conic found")


# ---------------------------------------------------------------------------
# implicitization


def test_implicitize_conic():
    f = implicitize_rational_curve([1, 0, 0], [0, 1, 0], [0, 0, 1], QQ)
    assert f.proportional_to(X * Z - Y * Y)


def test_implicitize_cuspidal_cubic():
    f = implicitize_rational_curve([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], QQ)
    assert f.proportional_to(Y ** 3 - X * X * Z)


def test_implicitize_errors():
    with pytest.raises(ConstructionError, match="common root"):
        implicitize_rational_curve([1, 1, 0], [0, 1, 1], [1, 2, 1], QQ)  # all vanish at (1:-1)
    with pytest.raises(ConstructionError, match="line"):
        implicitize_rational_curve([1, 0, 0], [0, 0, 1], [1, 0, 1], QQ)
    with pytest.raises(ConstructionError, match="birational"):
        implicitize_rational_curve([1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1], QQ)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 30), min_size=12, max_size=12), st.integers(0, 30))
def test_implicitize_vanishes_on_parametrization(cs, u):
    Xs, Ys, Zs = cs[0:4], cs[4:8], cs[8:12]
    try:
        f = implicitize_rational_curve(Xs, Ys, Zs, F)
    except ConstructionError:
        return
    assert f.degree == 3
    val = [sum((F(c) * F(u) ** i for i, c in enumerate(G)), F.zero) for G in (Xs, Ys, Zs)]
    assert not f(*val)


# ---------------------------------------------------------------------------
# cross-ratios


def test_harmonic_quadruple():
    assert j_invariant(Fraction(-1)) == 1728
    assert j_invariant(Fraction(2)) == 1728


@given(st.fractions().filter(lambda v: v not in (0, 1)))
def test_j_is_invariant_under_the_anharmonic_group(lam):
    j = j_invariant(lam)
    for other in (1 / lam, 1 - lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam):
        assert j_invariant(other) == j


def test_cross_ratio_of_standard_points():
    inf, zero, one = (1, 0), (0, 1), (1, 1)
    assert cross_ratio(inf, zero, one, (3, 1)) in (Fraction(3), Fraction(1, 3), Fraction(-2),
                                                   Fraction(-1, 2), Fraction(3, 2), Fraction(2, 3))


def test_pencil_check_errors():
    base = [point(F, 1, 0, 0), point(F, 0, 1, 0), point(F, 0, 0, 1), point(F, 1, 1, 1)]
    # members a xy + b yz + c xz with a + b + c = 0, smooth when abc != 0
    C1 = x * y + y * z - (x * z).scale(F(2))
    C2 = (x * y).scale(F(2)) - y * z - x * z
    rep = pencil_cross_ratio_check(base, C1, C2)
    assert isinstance(rep.distinct, bool) and len(rep.lambdas) == 2
    with pytest.raises(ConstructionError, match="singular"):
        pencil_cross_ratio_check(base, C1, x * y - x * z)
    with pytest.raises(ConstructionError, match="does not pass"):
        pencil_cross_ratio_check(base, C1, C1 + x * x)
    collinear = [point(F, 1, 0, 0), point(F, 0, 1, 0), point(F, 1, 1, 0), point(F, 0, 0, 1)]
    with pytest.raises(ConstructionError, match="collinear"):
        pencil_cross_ratio_check(collinear, C1, C2)


def test_pencil_trials_are_deterministic():
    assert random_pencil_trial(GF(101), 5) == random_pencil_trial(GF(101), 5)

import pytest

from severi.adjoint import adjoint_system, h0_omega_minus_t, is_geometrically_t_normal
from severi.constructions import curve_with_prescribed_singularities, general_points, tricuspidal_quartic
from severi.curves import CurveError, analyze
from severi.fields import GF, QQ
from severi.forms import coordinate_forms

F = GF(31)


@pytest.fixture(scope="module")
def four_node_sextic():
    return curve_with_prescribed_singularities(6, general_points(4, F, seed=0), [], F, seed=0).analysis


def test_tricuspidal_quartic_is_not_linearly_normal():
    a = tricuspidal_quartic(QQ)
    rep = is_geometrically_t_normal(a, 1)
    assert rep.branch == "interpolation-branch"
    assert (rep.m, rep.rank, rep.verdict) == (0, 1, False)


def test_negative_degree_branch():
    a = tricuspidal_quartic(QQ)
    rep = is_geometrically_t_normal(a, 2)
    assert rep.branch == "negative-degree-branch" and rep.verdict is False
    X, Y, Z = coordinate_forms(F)
    smooth = analyze(X ** 4 + Y ** 4 + Z ** 4)
    assert is_geometrically_t_normal(smooth, 5).verdict is True


def test_adjoint_dimension(four_node_sextic):
    A = adjoint_system(four_node_sextic, 2)
    assert A.dim == 2
    for f in A.basis:
        assert all(not f(P) for P in four_node_sextic.points)


def test_riemann_roch_cross_check(four_node_sextic):
    tw = h0_omega_minus_t(four_node_sextic, 1)
    assert tw.normal and tw.agrees and tw.value == 2
    # four nodes cannot impose independent conditions on lines
    tw = h0_omega_minus_t(four_node_sextic, 2)
    assert not tw.normal and not tw.agrees
    assert (tw.value, tw.formula_value) == (0, -1)


def test_incomplete_inventory_is_refused():
    X, Y, Z = coordinate_forms(QQ)
    from severi.forms import point

    a = analyze(Y * Y * Z - X ** 3, [point(QQ, 0, 0, 1)], complete=False)
    with pytest.raises(CurveError):
        is_geometrically_t_normal(a, 1)


def test_t_must_be_positive(four_node_sextic):
    with pytest.raises(ValueError):
        is_geometrically_t_normal(four_node_sextic, 0)

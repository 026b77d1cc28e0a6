import pytest

from severi.brill_noether import (kernel_syzygy_check, moduli_verdict, mu_from_points, mu_map,
                                  mu_rank_after_delete)
from severi.constructions import curve_with_prescribed_singularities, general_points, zariski_sextic
from severi.curves import CurveError
from severi.fields import GF

F = GF(31)


@pytest.fixture(scope="module")
def sextic():
    return curve_with_prescribed_singularities(6, general_points(4, F, seed=0), [], F, seed=0).analysis


def test_four_node_sextic_mu_is_isomorphism(sextic):
    m = mu_map(sextic)
    assert m.gln and m.label == "mu0"
    assert (m.dim_omega_minus_1, m.domain_dim, m.dim_omega) == (2, 6, 6)
    assert (m.rank, m.ker_dim, m.rho) == (6, 0, 0)
    assert m.dim_W == 6 - 6 + 1 + 2


def test_moduli_verdict(sextic):
    v = moduli_verdict(sextic)
    assert v.concluded and v.conclusion == 15


def test_deleting_a_node(sextic):
    for P in sextic.points:
        rep = mu_rank_after_delete(sextic, P)
        assert rep.applicable
        assert rep.deleted.dim_omega_minus_1 == 3
        assert rep.deleted.rank >= 7 and rep.inequality_holds


def test_septic_kernel_is_one_dimensional():
    pts = general_points(7, F, seed=0)
    m = mu_from_points(pts, 7, F)
    assert (m.dim_omega_minus_1, m.dim_omega, m.rank, m.ker_dim) == (3, 8, 8, 1)
    (vec,) = m.kernel
    assert len(vec) == 3
    assert kernel_syzygy_check(m).passed


def test_non_linearly_normal_model_is_labelled():
    a = zariski_sextic(F, seed=0).analysis
    m = mu_map(a)
    assert not m.gln and m.label != "mu0"
    v = moduli_verdict(a)
    assert not v.concluded and "linear normality" in v.note


def test_small_degree_refused():
    with pytest.raises(CurveError):
        mu_from_points([], 4, F)

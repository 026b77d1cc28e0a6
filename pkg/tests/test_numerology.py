import pytest
from hypothesis import assume, given, strategies as st

from severi.numerology import (NumerologyError, census, classify_family, degeneration_step_arithmetic,
                               family_params, genus_of, h0_plane, h0_preservation_degree,
                               maximal_rank_hypotheses, ramified_series_exists,
                               t_normal_existence_hypotheses)


def families():
    return st.integers(3, 14).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(0, 8)).flatmap(
            lambda nk: st.tuples(st.just(nk[0]), st.just(nk[1]),
                                 st.integers(0, max(0, (nk[0] - 1) * (nk[0] - 2) // 2 - nk[1])))))


def test_six_cuspidal_sextic_numbers():
    P = family_params(6, 6, 0)
    assert (P.N, P.g, P.rho, P.expected_dim, P.expected_moduli) == (27, 4, 4, 15, 7)
    assert classify_family(6, 6, 0).special


def test_quintic_with_three_cusps():
    P = family_params(5, 3, 0)
    assert (P.g, P.rho, P.expected_moduli, P.dim_Mg) == (3, 3, 6, 6)


def test_four_node_sextic_numbers():
    P = family_params(6, 0, 4)
    assert (P.g, P.rho, P.expected_moduli) == (6, 0, 15)


def test_negative_genus_rejected():
    with pytest.raises(NumerologyError):
        family_params(4, 2, 2)


@given(families())
def test_dimension_identities(nkd):
    n, k, d = nkd
    assume(genus_of(n, k, d) >= 0)
    P = family_params(n, k, d)
    assert P.N - d - 2 * k == 3 * n + P.g - 1 - k == P.expected_dim
    if P.g >= 2:
        assert P.expected_dim == 3 * P.g - 3 + P.rho - k + 8
        assert P.expected_moduli <= P.dim_Mg


@given(families())
def test_no_general_special_conflict(nkd):
    n, k, d = nkd
    assume(genus_of(n, k, d) >= 2)
    V = classify_family(n, k, d)
    assert not (V.general and V.special)


@given(st.integers(4, 14), st.data())
def test_one_cusp_has_expected_moduli(n, data):
    pa = (n - 1) * (n - 2) // 2
    d = data.draw(st.integers(0, pa - 1))
    assume(genus_of(n, 1, d) >= 2)
    assert classify_family(n, 1, d).expected_moduli


def test_flags():
    assert classify_family(5, 1, 1).has("general_moduli_one_cusp")
    assert classify_family(6, 1, 7).has("general_moduli_large_degree")
    assert classify_family(6, 6, 0).has("nonempty_t_normal")
    assert classify_family(3, 0, 0).flags == ("unknown",)


def test_hypothesis_checks():
    assert not t_normal_existence_hypotheses(12, 9, 0, 3).holds
    assert t_normal_existence_hypotheses(12, 7, 0, 3).holds
    h = maximal_rank_hypotheses(7, 6, 2)
    assert h.holds and h.regime == "small-genus"
    assert t_normal_existence_hypotheses(10, 1, 0, 4).notes


def test_ramified_series_examples():
    assert ramified_series_exists(4, 6, 2, (0, 1, 1))
    assert not ramified_series_exists(4, 5, 2, (0, 1, 1))
    with pytest.raises(NumerologyError):
        ramified_series_exists(4, 6, 2, (0, 1))


ramification = st.integers(1, 4).flatmap(
    lambda r: st.tuples(st.just(r), st.lists(st.integers(0, 4), min_size=r + 1, max_size=r + 1)))


@given(st.integers(0, 12), st.integers(1, 30), ramification, st.integers(0, 4))
def test_ramified_series_monotone(g, n, rb, i):
    r, b = rb
    assume(ramified_series_exists(g, n, r, b))
    assert ramified_series_exists(g, n + 1, r, b)
    if g:
        assert ramified_series_exists(g - 1, n, r, b)
    j = i % (r + 1)
    if b[j]:
        smaller = list(b)
        smaller[j] -= 1
        assert ramified_series_exists(g, n, r, smaller)


def test_ramified_series_not_monotone_in_growing_genus():
    # raising g can destroy existence, so only the decreasing direction is a property
    assert ramified_series_exists(4, 6, 2, (0, 0, 0))
    assert not ramified_series_exists(10, 6, 2, (0, 0, 0))


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("a", range(11))
def test_degeneration_identities(t, a):
    ar = degeneration_step_arithmetic(t + 3 + a, t, h0_plane(a), a)
    assert ar.line_holds and ar.curve_holds and ar.holds
    assert ar.curve_left == h0_plane(t + a)


def test_degeneration_guard():
    with pytest.raises(NumerologyError):
        degeneration_step_arithmetic(7, 1, 6, 2)


def test_preservation_degree():
    assert h0_preservation_degree(1, 1, 2) == -1
    assert h0_preservation_degree(2, 2, 5) == -1
    assert h0_preservation_degree(2, 1, 2) == 0


def test_census():
    rows = census(range(1, 13), range(0, 7))
    assert len(rows) == 1415
    assert all(r.params.g >= 0 for r in rows)
    row = next(r for r in rows if (r.params.n, r.params.k, r.params.d) == (6, 6, 0))
    assert row.as_dict()["expected_moduli"] == 7
    with pytest.raises(NumerologyError):
        census([], [0])

import json

import pytest
from hypothesis import given, settings, strategies as st

from severi.cli import main
from severi.fields import GF, QQ
from severi.forms import TernaryForm, num_monomials, point
from severi.io import (CurveFile, DeclaredSingularity, InputError, dumps_curve, loads_curve, parse_curve,
                       serialize_curve)

FIELDS = [QQ, GF(31), GF(31, 2)]


@st.composite
def curve_files(draw):
    F = draw(st.sampled_from(FIELDS))
    n = draw(st.integers(0, 4))
    if F is QQ:
        vals = st.fractions(max_denominator=50)
    elif F is GF(31):
        vals = st.integers(0, 30).map(F)
    else:
        vals = st.tuples(st.integers(0, 30), st.integers(0, 30)).map(F)
    coeffs = draw(st.lists(vals, min_size=num_monomials(n), max_size=num_monomials(n)))
    f = TernaryForm(F, n, tuple(F(c) for c in coeffs))
    sings = ()
    if draw(st.booleans()):
        c = draw(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(1, 5)))
        sings = (DeclaredSingularity(point(F, *c), draw(st.sampled_from([None, "node", "cusp"]))),)
    complete = draw(st.sampled_from([None, True, False]))
    return CurveFile(f, sings, complete)


@settings(max_examples=60)
@given(curve_files())
def test_round_trip(cf):
    text = dumps_curve(cf)
    back = loads_curve(text)
    assert back == cf
    assert dumps_curve(back) == text


def test_canonical_file_is_byte_stable():
    text = dumps_curve(CurveFile(TernaryForm(QQ, 1, (1, 0, -1)), (), True))
    assert dumps_curve(loads_curve(text)) == text
    assert text.endswith("}\n")


def _curve(**over):
    data = {"field": {"kind": "prime-field", "p": 31, "ext_degree": 1}, "degree": 2,
            "coefficients": [{"exponents": [1, 0, 1], "value": "1"}, {"exponents": [0, 2, 0], "value": "-1"}]}
    data.update(over)
    return data


@pytest.mark.parametrize("bad", [
    _curve(extra=1),
    _curve(degree=3),
    _curve(field={"kind": "prime-field", "p": 33}),
    _curve(field={"kind": "reals"}),
    _curve(coefficients=[{"exponents": [1, 0, 1], "value": "x"}]),
    _curve(coefficients=[{"exponents": [1, 0, 1], "value": 1.5}]),
    _curve(coefficients=[{"exponents": [1, 0, 1], "value": "1"}, {"exponents": [1, 0, 1], "value": "2"}]),
    _curve(singularities=[{"point": [0, 0], "kind": "node"}]),
    _curve(singularities=[{"point": ["0", "0", "1"], "kind": "tacnode"}]),
])
def test_malformed_files(bad):
    with pytest.raises(InputError):
        parse_curve(bad)


def test_fraction_values():
    cf = parse_curve(_curve(field={"kind": "rationals"},
                            coefficients=[{"exponents": [1, 0, 1], "value": "1/2"},
                                          {"exponents": [0, 2, 0], "value": "-3"}]))
    assert serialize_curve(cf)["coefficients"][0]["value"] == "1/2"


# ---------------------------------------------------------------------------
# command line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--n", "6", "--k", "6", "--d", "0")
    assert code == 0
    assert "g=4" in out and "rho=4" in out and "expected_dim=15" in out and "expected_moduli=7" in out


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "params", "--n", "6")[0] == 2
    assert run(capsys, "params", "--n", "2", "--k", "3", "--d", "0")[0] == 2
    assert run(capsys, "census", "--n", "5..3", "--k", "0")[0] == 2


def test_construct_then_normality(tmp_path, capsys):
    out = tmp_path / "quartic.json"
    code, text, _ = run(capsys, "construct", "tricuspidal-quartic", "--out", str(out))
    assert code == 0
    rep = json.loads(text)
    assert rep["results"]["analysis"]["k"] == 3
    code, text, _ = run(capsys, "normality", str(out), "--t", "1")
    res = json.loads(text)["results"]["normality"]
    assert code == 0 and res["verdict"] is False and res["branch"] == "interpolation-branch"
    assert res["rank"] == 1


def test_analyze_searches_finite_fields(tmp_path, capsys):
    path = tmp_path / "cubic.json"
    path.write_text(json.dumps(_curve(degree=3, coefficients=[
        {"exponents": [0, 2, 1], "value": "1"}, {"exponents": [3, 0, 0], "value": "-1"}])))
    code, text, _ = run(capsys, "analyze", str(path), "--t", "1")
    rep = json.loads(text)
    assert code == 0
    assert rep["results"]["analysis"]["k"] == 1
    assert rep["results"]["analysis"]["provenance"]["inventory_complete"] == "computed"


def test_declared_smooth_point_is_a_claim_failure(tmp_path, capsys):
    path = tmp_path / "c.json"
    data = _curve(singularities=[{"point": ["1", "1", "1"], "kind": "node"}], inventory_complete=True)
    path.write_text(json.dumps(data))
    assert run(capsys, "analyze", str(path))[0] == 1


def test_missing_file(capsys):
    assert run(capsys, "analyze", "/nonexistent/curve.json")[0] == 2


def test_rational_curve_without_declaration(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(_curve(field={"kind": "rationals"})))
    assert run(capsys, "analyze", str(path))[0] == 2


def test_mu_with_deletion(tmp_path, capsys):
    recipe = tmp_path / "r.json"
    recipe.write_text(json.dumps({"kind": "prescribed", "field": {"kind": "prime-field", "p": 31},
                                  "seed": 0, "parameters": {"degree": 6, "nodes": [
                                      ["1", "2", "1"], ["3", "7", "1"], ["11", "5", "1"], ["2", "13", "1"]]}}))
    out = tmp_path / "s.json"
    code, text, _ = run(capsys, "construct", str(recipe), "--out", str(out))
    assert code == 0, text
    code, text, _ = run(capsys, "mu", str(out), "--delete-point", "0")
    res = json.loads(text)["results"]
    assert code == 0
    assert (res["mu"]["rank"], res["mu"]["ker_dim"]) == (6, 0)
    assert res["deletion"]["deleted"]["h0_omega_minus_1"] == 3
    assert run(capsys, "mu", str(out), "--delete-point", "9")[0] == 2


def test_census_formats(tmp_path, capsys):
    for fmt in ("json", "csv", "md"):
        out = tmp_path / f"c.{fmt}"
        code, _, _ = run(capsys, "census", "--n", "4..6", "--k", "0..1", "--format", fmt, "--out", str(out))
        assert code == 0
        text = out.read_text()
        if fmt == "json":
            rows = json.loads(text)
            assert all(r["N"] - r["d"] - 2 * r["k"] == r["expected_dim"] for r in rows)
        elif fmt == "csv":
            assert text.splitlines()[0].startswith("n,k,d,N,g")
        else:
            assert text.startswith("| n | k | d |")


def test_environment_prime(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SEVERI_PRIME", "37")
    out = tmp_path / "z.json"
    code, text, _ = run(capsys, "construct", "zariski-sextic", "--out", str(out))
    assert code == 0 and json.loads(text)["field"]["p"] == 37
    code, text, _ = run(capsys, "construct", "zariski-sextic", "--p", "41", "--out", str(out))
    assert code == 0 and json.loads(text)["field"]["p"] == 41


def test_verify_paper_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-paper", "--fast", "--item", "1", "--item", "8")
    assert code == 0 and out.count("[PASS]") == 2
    code, out, _ = run(capsys, "verify-paper", "--item", "1", "--tamper", "1")
    assert code == 1 and "[FAIL]" in out

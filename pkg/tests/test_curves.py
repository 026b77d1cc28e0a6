import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from severi.constructions import (curve_with_prescribed_singularities, general_points, tricuspidal_equation,
                                  zariski_sextic)
from severi.curves import (CurveError, analyze, classify_singularity, find_singular_points,
                           irreducibility_certificate, is_reduced, points_position, transversal_intersection)
from severi.fields import GF, QQ
from severi.forms import TernaryForm, coordinate_forms, monomial_basis, point

P = 31
F = GF(P)
F2 = GF(P, 2)
x, y, z = coordinate_forms(F)


# ---------------------------------------------------------------------------
# brute-force oracle: every point of P^2(F_{31^2}), elements as a + b i with i^2 = -1


def _mul(u, v):
    return ((u[0] * v[0] - u[1] * v[1]) % P, (u[0] * v[1] + u[1] * v[0]) % P)


def _eval(form, X, Y, Z):
    n = form.degree
    one = (np.ones_like(X[0]), np.zeros_like(X[0]))
    pw = []
    for V in (X, Y, Z):
        row = [one]
        for _ in range(n):
            row.append(_mul(row[-1], V))
        pw.append(row)
    acc = (np.zeros_like(X[0]), np.zeros_like(X[0]))
    for (a, b, c), coef in zip(monomial_basis(n), form.coeffs):
        if coef:
            t = _mul(_mul(pw[0][a], pw[1][b]), pw[2][c])
            acc = ((acc[0] + coef.v * t[0]) % P, (acc[1] + coef.v * t[1]) % P)
    return acc


def brute_singular_points(f):
    g = np.arange(P * P, dtype=np.int64)
    A, B = np.meshgrid(g, g, indexing="ij")
    A, B = A.ravel(), B.ravel()
    charts = [
        ((A % P, A // P), (B % P, B // P), (np.ones_like(A), np.zeros_like(A))),
        ((g % P, g // P), (np.ones_like(g), np.zeros_like(g)), (np.zeros_like(g), np.zeros_like(g))),
        ((np.ones(1, np.int64), np.zeros(1, np.int64)), (np.zeros(1, np.int64),) * 2, (np.zeros(1, np.int64),) * 2),
    ]
    found = set()
    for X, Y, Z in charts:
        mask = np.ones_like(X[0], dtype=bool)
        for h in (f,) + f.partials():
            v = _eval(h, X, Y, Z)
            mask &= (v[0] == 0) & (v[1] == 0)
        for i in np.nonzero(mask)[0]:
            found.add(tuple((int(c[0][i]), int(c[1][i])) for c in (X, Y, Z)))
    return found


def as_pairs(Pt):
    out = []
    for c in Pt.coords:
        if hasattr(c, "c"):
            out.append((c.c[0], c.c[1]))
        else:
            out.append((c.v, 0))
    return tuple(out)


def oracle_curves():
    yield "tricuspidal quartic", tricuspidal_equation(F)
    yield "cuspidal cubic", y * y * z - x ** 3
    yield "six-cuspidal sextic", zariski_sextic(F, seed=0).analysis.curve
    for s in range(2):
        r = curve_with_prescribed_singularities(5, general_points(3, F, seed=s), [], F, seed=s)
        yield f"three-node quintic {s}", r.form
    rng = random.Random(7)
    for s in range(2):
        q1 = TernaryForm(F, 2, tuple(F.random(rng) for _ in range(6)))
        q2 = TernaryForm(F, 2, tuple(F.random(rng) for _ in range(6)))
        yield f"two conics {s}", q1 * q2
    yield "random quartic", TernaryForm(F, 4, tuple(F.random(rng) for _ in range(15)))


@pytest.mark.parametrize("name,f", list(oracle_curves()), ids=lambda v: v if isinstance(v, str) else "")
def test_search_matches_brute_force(name, f):
    res = find_singular_points(f, max_ext_degree=2)
    assert {as_pairs(Q) for Q in res.points} == brute_singular_points(f)


# ---------------------------------------------------------------------------
# classification


def test_tricuspidal_quartic_cusps():
    f = tricuspidal_equation(F)
    a = analyze(f)
    assert (a.k, a.d, a.genus) == (3, 0, 0)
    assert a.closure_certified
    s = classify_singularity(f, point(F, 1, 0, 0))
    assert s.kind == "cusp" and s.tangents[0].proportional_to(y - z)


def test_node_tangents():
    f = x * x * z - y * y * z + x ** 3
    s = classify_singularity(f, point(F, 0, 0, 1))
    assert s.kind == "node"
    assert {str(t) for t in s.tangents} == {str((x - y).normalized()), str((x + y).normalized())}


def test_node_with_conjugate_tangents():
    # x^2 + y^2 does not factor mod 31
    f = (x * x + y * y) * z + x ** 3
    s = classify_singularity(f, point(F, 0, 0, 1))
    assert s.kind == "node" and s.tangents == ()


def test_tacnode_is_other():
    f = y * y * z * z - x ** 4
    s = classify_singularity(f, point(F, 0, 0, 1))
    assert s.kind == "other"
    with pytest.raises(CurveError):
        analyze(f)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_classification_is_chart_independent(seed):
    rng = random.Random(seed)
    f = tricuspidal_equation(F)
    while True:
        M = [[F.random(rng) for _ in range(3)] for _ in range(3)]
        from severi.linalg import ExactMatrix, det

        if det(ExactMatrix.make(F, M)):
            break
    g = f.substitute(M)
    res = find_singular_points(g)
    for Q in res.points:
        kinds = {classify_singularity(g, Q, chart).kind for chart in range(3) if Q[chart]}
        assert kinds == {"cusp"}


def test_declared_points_must_be_singular():
    conic = x * z - y * y
    with pytest.raises(CurveError):
        analyze(conic * x, [point(F, 1, 1, 1)])


def test_reducedness():
    conic = x * z - y * y
    assert is_reduced(conic * x)
    assert not is_reduced(conic * conic)
    assert not is_reduced(x * x * y)
    with pytest.raises(CurveError):
        analyze(conic * conic)


def test_characteristic_guard():
    with pytest.raises(CurveError):
        analyze(tricuspidal_equation(GF(3)))
    # p = 5 exceeds the degree, so the quartic is admissible there
    assert analyze(tricuspidal_equation(GF(5))).k == 3


def test_rational_curve_needs_declared_points():
    X, Y, Z = coordinate_forms(QQ)
    with pytest.raises(CurveError):
        analyze(Y * Y * Z - X ** 3)
    a = analyze(Y * Y * Z - X ** 3, [point(QQ, 0, 0, 1)], complete=True)
    assert (a.k, a.genus) == (1, 0)


def test_conjugate_singular_points_over_extension():
    # two conics meeting in conjugate pairs give nodes over F_{31^2}
    rng = random.Random(3)
    for _ in range(20):
        q1 = TernaryForm(F, 2, tuple(F.random(rng) for _ in range(6)))
        q2 = TernaryForm(F, 2, tuple(F.random(rng) for _ in range(6)))
        if transversal_intersection(q1, q2).verdict != "transversal":
            continue
        res = find_singular_points(q1 * q2)
        if res.field is F2 and res.closure_certified:
            a = analyze(q1 * q2)
            assert a.d == 4 and a.irreducibility != "certified"
            return
    pytest.skip("no conjugate configuration among the samples")


def test_irreducibility_certificate():
    a = analyze(tricuspidal_equation(F))
    assert irreducibility_certificate(a) == "certified"
    conic = x * z - y * y
    b = analyze(conic * (x - z))
    assert irreducibility_certificate(b) != "certified"


def test_transversal_intersection():
    conic = x * z - y * y
    I = transversal_intersection(conic, x - z)
    assert I.verdict == "transversal"
    assert set(I.points) == {point(F, 1, 1, 1), point(F, 1, -1, 1)}
    assert transversal_intersection(conic, x).verdict != "transversal"
    with pytest.raises(CurveError):
        transversal_intersection(conic * x, conic)


def test_points_position():
    pts = [point(F, 1, 0, 0), point(F, 0, 1, 0), point(F, 1, 1, 0)]
    assert points_position(pts, 1).rank == 2
    assert not points_position(pts, 1).independent
    assert points_position(pts, 2).independent

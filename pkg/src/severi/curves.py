"""Singular points of plane curves: search, verification, local classification, genus.

Search over F_p works by elimination rather than by scanning P^2(F_{p^e}):
after a random projective change of coordinates that keeps (0:1:0) off the
curve, every singular point projects to a root of

    G(x) = gcd(Res_y(f, f_y), Res_y(f, f_x))      (affine chart z = 1),

and the points over each root are the common roots of f, f_x, f_y, f_z on the
fibre.  Roots are taken in F_{p^E} with E = lcm(1..K), which contains every
F_{p^e} with e <= K.  When G and every fibre gcd split completely over that
field, no singular point over the algebraic closure was missed and the
analysis records ``closure_certified = True``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from functools import reduce
from math import lcm

from . import fpx, upoly
from .fields import QQ, ExtensionField, Field, PrimeField, GF
from .forms import ProjPoint, TernaryForm, apply_matrix, monomial_basis, num_monomials
from .linalg import ExactMatrix, mat_rank


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class SingularPoint:
    point: ProjPoint
    kind: str  # "node" | "cusp" | "other"
    tangents: tuple = ()
    tangent_cone: TernaryForm | None = None
    quadratic_rank: int = 0
    delta: int = 1
    adjoint_multiplicity: int = 1

    @property
    def tangents_rational(self) -> bool:
        return self.kind != "node" or len(self.tangents) == 2


@dataclass(frozen=True)
class CurveAnalysis:
    curve: TernaryForm
    singular_points: tuple
    k: int
    d: int
    genus: int
    reduced: bool
    completeness: str
    complete: bool
    irreducibility: str
    closure_certified: bool = False
    smoothed: tuple = ()
    notes: tuple = ()

    @property
    def degree(self) -> int:
        return self.curve.degree

    @property
    def field(self) -> Field:
        return self.curve.field

    @property
    def points(self) -> list[ProjPoint]:
        return [s.point for s in self.singular_points]

    @property
    def cusps(self) -> list[SingularPoint]:
        return [s for s in self.singular_points if s.kind == "cusp"]

    @property
    def nodes(self) -> list[SingularPoint]:
        return [s for s in self.singular_points if s.kind == "node"]

    @property
    def arithmetic_genus(self) -> int:
        n = self.degree
        return (n - 1) * (n - 2) // 2


@dataclass(frozen=True)
class SearchResult:
    points: tuple
    field: Field
    completeness: str
    closure_certified: bool
    transform: tuple = ()


# ---------------------------------------------------------------------------
# basic predicates


def _require_prime_field(f: TernaryForm) -> PrimeField:
    F = f.field
    if F is QQ:
        raise CurveError("search needs a finite field; over the rationals declare the singular points")
    if not isinstance(F, PrimeField):
        raise CurveError("search expects a curve defined over a prime field")
    if F.p <= f.degree:
        raise CurveError(f"characteristic {F.p} must exceed the degree {f.degree}")
    return F


def check_characteristic(f: TernaryForm):
    p = f.field.characteristic
    if p and p <= f.degree:
        raise CurveError(f"characteristic {p} must exceed the degree {f.degree}")


def is_singular_at(f: TernaryForm, P: ProjPoint) -> bool:
    if P.field is not f.field:
        f = f.base_change(P.field)
    return not f(P) and all(not g(P) for g in f.partials())


def _same_field(f: TernaryForm, P: ProjPoint) -> TernaryForm:
    if P.field is f.field:
        return f
    if f.field is QQ or P.field is QQ or f.field.characteristic != P.field.characteristic:
        raise CurveError(f"field mismatch: curve over {f.field}, point over {P.field}")
    if isinstance(f.field, PrimeField):
        return f.base_change(P.field)
    raise CurveError(f"field mismatch: curve over {f.field}, point over {P.field}")


# ---------------------------------------------------------------------------
# local classification


def _local_expansion(f: TernaryForm, P: ProjPoint, chart: int):
    """Rescale P so P[chart] = 1; return (g, i, j, k, P') with g(u, v, w) = f(u e_j + v e_k + w P')."""
    F = f.field
    if not P[chart]:
        raise CurveError(f"point {P} is not in chart {chart}")
    inv = 1 / P[chart] if F is QQ else P[chart].inverse()
    Pc = [c * inv for c in P.coords]
    j, k = [i for i in range(3) if i != chart]
    M = [[F.zero] * 3 for _ in range(3)]
    M[j][0] = F.one
    M[k][1] = F.one
    for r in range(3):
        M[r][2] = Pc[r]
    g = f.substitute(M)
    return g, j, k, Pc


def _local_part(g: TernaryForm, order: int) -> dict:
    n = g.degree
    return {(a, b): c for (a, b, w), c in zip(monomial_basis(n), g.coeffs) if a + b == order and c}


def classify_singularity(curve: TernaryForm, P: ProjPoint, chart: int | None = None) -> SingularPoint:
    f = _same_field(curve, P)
    F = f.field
    check_characteristic(f)
    if f.is_zero():
        raise CurveError("the zero form has no singular points to classify")
    if f(P):
        raise CurveError(f"point {P} is not on the curve")
    if any(g(P) for g in f.partials()):
        raise CurveError(f"point {P} is not singular")
    if chart is None:
        chart = max(i for i in range(3) if P[i])
    g, j, k, Pc = _local_expansion(f, P, chart)
    if g.is_zero():
        raise CurveError("curve vanishes identically on the chart")
    q = _local_part(g, 2)
    al, be, ga = q.get((2, 0), F.zero), q.get((1, 1), F.zero), q.get((0, 2), F.zero)
    # local coordinates as linear forms in x, y, z: u = x_j - P_j x_chart, v = x_k - P_k x_chart
    def lin(cj, ck):
        c = [F.zero] * 3
        c[j] = c[j] + cj
        c[k] = c[k] + ck
        c[chart] = c[chart] - cj * Pc[j] - ck * Pc[k]
        return TernaryForm(F, 1, tuple(c))

    U, V = lin(F.one, F.zero), lin(F.zero, F.one)
    cone = (U * U).scale(al) + (U * V).scale(be) + (V * V).scale(ga)
    if not (al or be or ga):
        return SingularPoint(P, "other", (), None, 0)
    disc = be * be - 4 * al * ga
    if disc:
        from .fields import sqrt

        r = sqrt(disc, F)
        tangents: tuple = ()
        if r is not None:
            if al:
                s1 = (-be + r) / (2 * al)
                s2 = (-be - r) / (2 * al)
                tangents = (lin(F.one, -s1).normalized(), lin(F.one, -s2).normalized())
            else:
                tangents = (lin(F.zero, F.one).normalized(), lin(be, ga).normalized())
            tangents = tuple(sorted(tangents, key=lambda t: tuple(upoly.sort_key(c) for c in t.coeffs)))
        return SingularPoint(P, "node", tangents, cone, 2)
    # rank one: Q = al (u + be/(2 al) v)^2 or ga v^2
    if al:
        l1, l2 = F.one, be / (2 * al)
    else:
        l1, l2 = F.zero, F.one
    cubic = _local_part(g, 3)
    du, dv = -l2, l1
    val = F.zero
    for (a, b), c in cubic.items():
        val = val + c * du ** a * dv ** b
    tangent = lin(l1, l2).normalized()
    if val:
        return SingularPoint(P, "cusp", (tangent,), cone, 1)
    return SingularPoint(P, "other", (tangent,), cone, 1)


# ---------------------------------------------------------------------------
# reducedness


def _binary_squarefree(coeffs: list) -> bool:
    """Squarefreeness of a univariate polynomial of full formal degree."""
    h = upoly.trim(list(coeffs))
    if len(h) <= 2:
        return True
    return len(upoly.gcd(h, upoly.deriv(h))) == 1


def _slice_points(F: Field, rng: random.Random):
    if F is QQ:
        return [F(rng.randint(-30, 30)) for _ in range(3)], [F(rng.randint(-30, 30)) for _ in range(3)]
    return [F.random(rng) for _ in range(3)], [F.random(rng) for _ in range(3)]


def is_reduced(f: TernaryForm, seed: int = 0) -> bool:
    """Exact reducedness test (squarefree as a form).

    Fast path: the restriction to a line is squarefree of full degree, which
    certifies reducedness.  After three unlucky lines the exact test decides:
    in coordinates with f(0:1:0) != 0, f is reduced iff Res_y(f, f_y) != 0.
    """
    check_characteristic(f)
    if f.is_zero():
        return False
    if f.degree <= 1:
        return True
    F = f.field
    rng = random.Random(seed)
    tries = 0
    for _ in range(20):
        P, Q = _slice_points(F, rng)
        if f(Q) == 0 or not any(P) or not any(Q):
            continue
        h = f.restrict_to_line(P, Q)
        tries += 1
        if _binary_squarefree(h):
            return True
        if tries >= 3:
            break
    return _reduced_by_resultant(f, rng)


def _reduced_by_resultant(f: TernaryForm, rng: random.Random) -> bool:
    F = f.field
    M = _transform_avoiding([f], F, rng)
    g = f.substitute(M)
    gy = g.partial(1)
    if isinstance(F, PrimeField):
        res = fpx.resultant_y(_xpolys_int(g), _xpolys_int(gy), F.p)
        return bool(res)
    res = _generic_resultant_y(_xpolys_generic(g), _xpolys_generic(gy), F)
    return bool(res)


def _transform_avoiding(forms, F: Field, rng: random.Random, first_identity: bool = True):
    """An invertible M whose second column is off every given form."""
    if first_identity and all(fm(F.zero, F.one, F.zero) for fm in forms):
        return [[F.one, F.zero, F.zero], [F.zero, F.one, F.zero], [F.zero, F.zero, F.one]]
    for _ in range(500):
        if F is QQ:
            M = [[F(rng.randint(-9, 9)) for _ in range(3)] for _ in range(3)]
        else:
            M = [[F.random(rng) for _ in range(3)] for _ in range(3)]
        col = (M[0][1], M[1][1], M[2][1])
        if not all(fm(*col) for fm in forms):
            continue
        if mat_rank(ExactMatrix.make(F, M)) == 3:
            return M
    raise CurveError("could not find coordinates with (0:1:0) off the curve")


def _xpolys_int(g: TernaryForm) -> list:
    """g(x, y, 1) as a list over powers of y of int polynomials in x."""
    n = g.degree
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for (a, b, c), coef in zip(monomial_basis(n), g.coeffs):
        if coef:
            out[b][a] = coef.v
    return [fpx.trim(r) for r in out]


def _xpolys_generic(g: TernaryForm) -> list:
    n = g.degree
    F = g.field
    out = [[F.zero] * (n + 1) for _ in range(n + 1)]
    for (a, b, c), coef in zip(monomial_basis(n), g.coeffs):
        if coef:
            out[b][a] = coef
    return [upoly.trim(r) for r in out]


def _generic_resultant_y(a, b, F: Field):
    """Resultant over F[x] by Bareiss on the Sylvester matrix (generic fields)."""
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
    m = rows
    n = size
    prev = [F.one]
    for kk in range(n - 1):
        piv = next((i for i in range(kk, n) if m[i][kk]), None)
        if piv is None:
            return []
        m[kk], m[piv] = m[piv], m[kk]
        akk = m[kk][kk]
        for i in range(kk + 1, n):
            aik = m[i][kk]
            for j in range(kk + 1, n):
                t = upoly.sub(upoly.mul(akk, m[i][j]), upoly.mul(aik, m[kk][j]))
                m[i][j] = upoly.exact_div(t, prev)
            m[i][kk] = []
        prev = akk
    return m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# common zeros by elimination


def search_field(p: int, max_ext_degree: int) -> Field:
    E = reduce(lcm, range(1, max_ext_degree + 1), 1)
    return GF(p, E)


def _fibre_points(forms_L, x0, z0, L):
    polys = [fm.dehomogenize_y(x0, z0) for fm in forms_L]
    h = []
    for q in polys:
        h = upoly.gcd(h, q) if h else upoly.trim(list(q))
        if h and len(h) == 1:
            return [], True
    if not h:
        raise CurveError("a whole fibre lies in the zero locus")
    return upoly.roots(h, L), upoly.splits(h, L)


def common_zeros(forms: list[TernaryForm], pairs: list[tuple[int, int]], max_ext_degree: int,
                 seed: int = 0, avoid: list[int] | None = None) -> SearchResult:
    """All common zeros of ``forms`` over F_{p^E}, E = lcm(1..K).

    ``pairs`` index the forms whose y-resultants are combined (by gcd) into the
    eliminant; the first form of every pair must be in ``avoid`` so that its
    leading y-coefficient is a nonzero constant after the coordinate change.
    """
    F = forms[0].field
    p = F.p
    L = search_field(p, max_ext_degree)
    rng = random.Random(seed)
    avoid = avoid if avoid is not None else sorted({a for a, _ in pairs})
    M = _transform_avoiding([forms[i] for i in avoid], F, rng)
    g = [fm.substitute(M) for fm in forms]
    G = None
    for a, b in pairs:
        r = fpx.resultant_y(_xpolys_int(g[a]), _xpolys_int(g[b]), p)
        G = r if G is None else fpx.gcd(G, r, p)
    if not G:
        raise CurveError("eliminant vanishes identically (common component)")
    factors, x_split = fpx.split_over(G, p, L.e if isinstance(L, ExtensionField) else 1)
    g_L = [fm.base_change(L) for fm in g]
    found = []
    certified = x_split
    for fac in factors:
        for x0 in upoly.roots([L(c) for c in fac], L):
            ys, ok = _fibre_points(g_L, x0, L.one, L)
            certified = certified and ok
            found.extend((x0, y0, L.one) for y0 in ys)
    ys, ok = _fibre_points(g_L, L.one, L.zero, L)
    certified = certified and ok
    found.extend((L.one, y0, L.zero) for y0 in ys)
    M_L = [[L(c) for c in row] for row in M]
    pts = {apply_matrix(M_L, ProjPoint.make(L, v)) for v in found}
    field_out: Field = L
    if isinstance(L, ExtensionField) and all(c.in_prime_field() for P in pts for c in P.coords):
        field_out = F
        pts = {ProjPoint(F, tuple(F(c.c[0]) for c in P.coords)) for P in pts}
    K = max_ext_degree
    return SearchResult(tuple(sorted(pts, key=lambda P: P.sort_key())), field_out,
                        f"exhaustive-up-to-ext-degree {K}", certified,
                        tuple(tuple(r) for r in M))


def find_singular_points(curve: TernaryForm, max_ext_degree: int = 2, seed: int = 0) -> SearchResult:
    _require_prime_field(curve)
    if curve.is_zero():
        raise CurveError("the zero form is not a curve")
    if max_ext_degree < 1:
        raise CurveError("max_ext_degree must be positive")
    if curve.degree <= 1:
        L = curve.field
        return SearchResult((), L, f"exhaustive-up-to-ext-degree {max_ext_degree}", True)
    fx, fy, fz = curve.partials()
    try:
        res = common_zeros([curve, fx, fy, fz], [(0, 2), (0, 1)], max_ext_degree, seed, avoid=[0])
    except CurveError as exc:
        if "eliminant" in str(exc):
            raise CurveError("curve is not reduced (discriminant vanishes identically)") from exc
        raise
    for P in res.points:
        if not is_singular_at(curve, P):
            raise AssertionError(f"search returned non-singular point {P}")
    return res


def declare_singular_points(curve: TernaryForm, points) -> list[ProjPoint]:
    out = []
    seen = set()
    for P in points:
        if not is_singular_at(_same_field(curve, P), P):
            raise CurveError(f"point {P} not singular")
        if P in seen:
            raise CurveError(f"point {P} declared twice")
        seen.add(P)
        out.append(P)
    return out


# ---------------------------------------------------------------------------
# analysis


def _common_field(points) -> Field | None:
    fields = {id(P.field): P.field for P in points}
    if not fields:
        return None
    if len(fields) == 1:
        return next(iter(fields.values()))
    exts = [F for F in fields.values() if isinstance(F, ExtensionField)]
    if len({id(F) for F in exts}) == 1 and all(isinstance(F, PrimeField) or F is exts[0] for F in fields.values()):
        return exts[0]
    raise CurveError("declared points live over incompatible fields")


def analyze(curve: TernaryForm, points=None, *, complete: bool = False, max_ext_degree: int = 2,
            seed: int = 0, smoothed=(), irreducibility: str | None = None, notes=()) -> CurveAnalysis:
    """Classify the singular points of a reduced curve and compute its genus.

    With ``points`` given, those points are verified (declared mode) and
    ``complete`` records whether a construction guarantees that they, together
    with ``smoothed``, make up the whole singular locus.  Without points, the
    elimination search runs over extensions of degree up to ``max_ext_degree``.

    ``smoothed`` lists singular points left out of the inventory: the modeled
    family member smooths them, so they impose no adjoint condition and do not
    count in d, k or the genus.
    """
    if curve.is_zero():
        raise CurveError("the zero form is not a curve")
    check_characteristic(curve)
    if not is_reduced(curve, seed):
        raise CurveError("curve is not reduced")
    smoothed_pts = [s.point if isinstance(s, SingularPoint) else s for s in smoothed]
    closure = False
    if points is None:
        res = find_singular_points(curve, max_ext_degree, seed)
        skip = set()
        for P in smoothed_pts:
            Q = P.base_change(res.field) if P.field is not res.field and isinstance(P.field, PrimeField) else P
            if Q not in res.points:
                raise CurveError(f"smoothed point {P} is not a singular point found by the search")
            skip.add(Q)
        keep = [P for P in res.points if P not in skip]
        completeness = res.completeness
        is_complete = True
        closure = res.closure_certified
        work = res.field
        if keep and all(isinstance(P.field, PrimeField) for P in keep):
            work = keep[0].field
    else:
        keep = [s.point if isinstance(s, SingularPoint) else s for s in points]
        work = _common_field(keep) or curve.field
        keep = [P.base_change(work) if P.field is not work else P for P in keep]
        declare_singular_points(curve, keep)
        for P in smoothed_pts:
            if not is_singular_at(_same_field(curve, P), P):
                raise CurveError(f"point {P} not singular")
        completeness = "declared-and-verified"
        is_complete = complete
    if keep and not (work is curve.field or isinstance(curve.field, PrimeField)):
        raise CurveError("points and curve live over incompatible fields")
    if not keep and points is None:
        work = curve.field
    f = curve.base_change(work) if work is not curve.field else curve
    keep = [P.base_change(work) if P.field is not work else P for P in keep]
    sing = tuple(sorted((classify_singularity(f, P) for P in keep), key=lambda s: s.point.sort_key()))
    smooth_sing = tuple(classify_singularity(curve, P) for P in smoothed_pts)
    for s in sing + smooth_sing:
        if s.kind == "other":
            raise CurveError(
                f"singular point {s.point} is neither a node nor an ordinary cusp "
                f"(quadratic part of rank {s.quadratic_rank})")
    k = sum(1 for s in sing if s.kind == "cusp")
    d = sum(1 for s in sing if s.kind == "node")
    n = curve.degree
    g = (n - 1) * (n - 2) // 2 - d - k
    out = CurveAnalysis(f, sing, k, d, g, True, completeness, is_complete,
                        irreducibility or "assumed", closure, smooth_sing, tuple(notes))
    if irreducibility is None and is_complete:
        if irreducibility_certificate(out) == "certified":
            out = replace(out, irreducibility="certified")
    return out


def irreducibility_certificate(analysis: CurveAnalysis) -> str:
    """Bezout certificate: a reducible reduced curve has >= n - 1 nodes.

    Two components of degrees a and b meet in ab >= n - 1 points counted with
    multiplicity; each meeting point is a singular point on two branches, so
    it is not a cusp.  With only nodes and cusps present, d < n - 1 therefore
    rules out a splitting.
    """
    if not analysis.complete:
        raise CurveError("irreducibility certificate needs a complete singular inventory")
    if analysis.smoothed:
        return "unknown"
    if any(s.kind == "other" for s in analysis.singular_points):
        return "unknown"
    if analysis.d < analysis.degree - 1:
        return "certified"
    return "unknown"


# ---------------------------------------------------------------------------
# intersections and point position


@dataclass(frozen=True)
class Intersection:
    points: tuple
    field: Field
    verdict: str  # "transversal" | "not verified transversal"
    expected: int
    closure_certified: bool


def transversal_intersection(A: TernaryForm, B: TernaryForm, max_ext_degree: int = 2,
                             seed: int = 0) -> Intersection:
    _require_prime_field(A)
    _require_prime_field(B)
    if A.field is not B.field:
        raise CurveError("curves over different fields")
    if A.is_zero() or B.is_zero():
        raise CurveError("zero form")
    try:
        res = common_zeros([A, B], [(0, 1)], max_ext_degree, seed, avoid=[0, 1])
    except CurveError as exc:
        raise CurveError("common component detected") from exc
    L = res.field
    Al, Bl = A.base_change(L), B.base_change(L)
    ok = len(res.points) == A.degree * B.degree
    if ok:
        for P in res.points:
            ga = [h(P) for h in Al.partials()] if A.degree else []
            gb = [h(P) for h in Bl.partials()] if B.degree else []
            if not any(ga) or not any(gb):
                ok = False
                break
            cross = (ga[1] * gb[2] - ga[2] * gb[1], ga[2] * gb[0] - ga[0] * gb[2], ga[0] * gb[1] - ga[1] * gb[0])
            if not any(cross):
                ok = False
                break
    return Intersection(res.points, L, "transversal" if ok else "not verified transversal",
                        A.degree * B.degree, res.closure_certified)


@dataclass(frozen=True)
class PointsPosition:
    m: int
    rank: int
    h0_ideal: int
    independent: bool


def evaluation_matrix(points, m: int) -> ExactMatrix:
    from .forms import monomial_values

    if m < 0:
        raise ValueError("degree must be nonnegative")
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise CurveError("duplicate points")
    if not pts:
        return ExactMatrix.make(QQ, [], ncols=num_monomials(m))
    F = pts[0].field
    for P in pts:
        if P.field is not F:
            raise CurveError("points over different fields")
    return ExactMatrix.make(F, [monomial_values(P.coords, m) for P in pts])


def points_position(points, m: int) -> PointsPosition:
    pts = list(points)
    E = evaluation_matrix(pts, m)
    r = mat_rank(E) if pts else 0
    return PointsPosition(m, r, num_monomials(m) - r, r == len(pts))

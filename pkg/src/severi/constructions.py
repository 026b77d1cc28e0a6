"""Explicit curves and point configurations: gallery equations, prescribed
singularities, marked unions, implicitization and the pencil cross-ratio check.

Every construction is deterministic given its parameters and seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import upoly
from .curves import (CurveAnalysis, CurveError, analyze, check_characteristic, is_reduced,
                     points_position, transversal_intersection)
from .fields import QQ, Field, GF, PrimeField
from .forms import ProjPoint, TernaryForm, coordinate_forms, monomial_basis, point
from .linalg import ExactMatrix, mat_kernel, mat_rank
from .numerology import degeneration_step_arithmetic, h0_preservation_degree

RETRIES = 3


class ConstructionError(CurveError):
    pass


def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def _random_combination(vectors, field: Field, rng: random.Random):
    out = [field.zero] * len(vectors[0])
    for v in vectors:
        c = field.random(rng)
        out = [a + c * b for a, b in zip(out, v)]
    return out


# ---------------------------------------------------------------------------
# tricuspidal quartic


def tricuspidal_equation(field: Field) -> TernaryForm:
    x, y, z = coordinate_forms(field)
    return x * x * y * y + y * y * z * z + z * z * x * x - (x * y * z * (x + y + z)).scale(field(2))


def tricuspidal_quartic(field: Field = QQ, max_ext_degree: int = 2, equation: TernaryForm | None = None) -> CurveAnalysis:
    """The rational quartic with cusps at the three coordinate points.

    Over a finite field the singular locus is searched; over the rationals the
    three coordinate points are declared and completeness follows from the
    construction (three cusps already exhaust the arithmetic genus).
    """
    f = equation if equation is not None else tricuspidal_equation(field)
    check_characteristic(f)
    if field is QQ:
        pts = [point(field, 1, 0, 0), point(field, 0, 1, 0), point(field, 0, 0, 1)]
        a = analyze(f, pts, complete=True,
                    notes=("completeness by construction: three cusps on a quartic leave no room "
                           "for further singular points (delta <= 3 for an irreducible quartic)",))
        if a.k == 3 and a.d == 0:
            a = _with_irreducibility(a, "certified")
        return a
    return analyze(f, max_ext_degree=max_ext_degree)


def _with_irreducibility(a: CurveAnalysis, value: str) -> CurveAnalysis:
    from dataclasses import replace

    return replace(a, irreducibility=value)


# ---------------------------------------------------------------------------
# Zariski sextic


def _is_smooth_conic(f: TernaryForm) -> bool:
    if f.degree != 2 or f.field.characteristic == 2:
        return False
    H = [[f.partial(i).partial(j).coeffs[0] for j in range(3)] for i in range(3)]
    return mat_rank(ExactMatrix.make(f.field, H)) == 3


def default_conic_points(field: Field):
    x, y, z = coordinate_forms(field)
    conic = x * z - y * y
    pts = [point(field, 1, u, u * u) for u in range(6)]
    return conic, pts


@dataclass(frozen=True)
class ZariskiSextic:
    analysis: CurveAnalysis
    conic: TernaryForm
    cubic: TernaryForm
    seed: int
    attempts: int


def zariski_sextic(field: Field | None = None, conic: TernaryForm | None = None, points=None,
                   seed: int = 0, max_ext_degree: int = 2) -> ZariskiSextic:
    """Six cusps on a conic: f2^3 + f3^2 with f3 a cubic through six points of f2."""
    field = field or GF(31)
    if not isinstance(field, PrimeField):
        raise ConstructionError("the sextic is built and searched over a prime field")
    if field.p <= 6:
        raise ConstructionError(f"characteristic {field.p} must exceed 6")
    if conic is None and points is None:
        conic, points = default_conic_points(field)
    if conic is None or points is None:
        raise ConstructionError("give both the conic and the six points, or neither")
    if conic.field is not field:
        raise ConstructionError("conic over a different field")
    if not _is_smooth_conic(conic):
        raise ConstructionError("f2 must be a smooth conic")
    pts = list(points)
    if len(pts) != 6 or len(set(pts)) != 6:
        raise ConstructionError("need six distinct points")
    for P in pts:
        if P.field is not field:
            raise ConstructionError(f"point {P} is not rational over {field}")
        if conic(P):
            raise ConstructionError(f"point {P} is not on the conic")
    from .curves import evaluation_matrix

    basis = mat_kernel(evaluation_matrix(pts, 3))
    rng = _rng(seed)
    target = set(pts)
    for attempt in range(1, RETRIES + 1):
        f3 = TernaryForm(field, 3, tuple(_random_combination(basis, field, rng)))
        if f3.is_zero():
            continue
        try:
            inter = transversal_intersection(conic, f3, max_ext_degree, seed)
        except CurveError:
            continue
        if inter.verdict != "transversal" or set(inter.points) != target:
            continue
        f = conic ** 3 + f3 * f3
        a = analyze(f, max_ext_degree=max_ext_degree, seed=seed)
        if set(a.points) == target and a.k == 6 and a.d == 0:
            return ZariskiSextic(a, conic, f3, seed, attempt)
    raise ConstructionError(f"no suitable cubic after {RETRIES} attempts; try another seed")


# ---------------------------------------------------------------------------
# prescribed singularities


def _monomial_derivative(e, i, P):
    """d/dx_i of the monomial x^e evaluated at P."""
    if not e[i]:
        return P.field.zero
    e2 = list(e)
    e2[i] -= 1
    v = P.field(e[i])
    for j in range(3):
        if e2[j]:
            v = v * P[j] ** e2[j]
    return v


def _monomial_second(e, i, j, P):
    e2 = list(e)
    c = e2[i]
    e2[i] -= 1
    if e2[i] < 0:
        return P.field.zero
    c2 = e2[j]
    e2[j] -= 1
    if e2[j] < 0:
        return P.field.zero
    v = P.field(c * c2)
    for r in range(3):
        if e2[r]:
            v = v * P[r] ** e2[r]
    return v


def _second_point_on_line(L: TernaryForm, P: ProjPoint) -> ProjPoint:
    F = L.field
    K = mat_kernel(ExactMatrix.make(F, [list(L.coeffs)]))
    for v in K:
        Q = ProjPoint.make(F, v)
        if Q != P:
            return Q
    raise ConstructionError("tangent line is degenerate")


def singularity_conditions(n: int, nodes, cusps, field: Field) -> ExactMatrix:
    """Linear conditions on degree-n coefficients for nodes and fixed-tangent cusps."""
    mons = monomial_basis(n)
    rows = []
    for P in nodes:
        for i in range(3):
            rows.append([_monomial_derivative(e, i, P) for e in mons])
    for P, L in cusps:
        if L.degree != 1 or L.is_zero():
            raise ConstructionError("cusp tangent must be a line")
        if L(P):
            raise ConstructionError(f"tangent line does not pass through {P}")
        for i in range(3):
            rows.append([_monomial_derivative(e, i, P) for e in mons])
        Q = _second_point_on_line(L, P)
        # the Hessian at P must kill the tangent direction
        for i in range(3):
            rows.append([sum((_monomial_second(e, i, j, P) * Q[j] for j in range(3)), field.zero)
                         for e in mons])
    return ExactMatrix.make(field, rows, ncols=len(mons))


@dataclass(frozen=True)
class PrescribedResult:
    n: int
    solution_dim: int
    conditions: int
    rank: int
    form: TernaryForm | None
    analysis: CurveAnalysis | None
    seed: int
    attempts: int


def curve_with_prescribed_singularities(n: int, nodes=(), cusps=(), field: Field | None = None,
                                        seed: int = 0, max_ext_degree: int = 2,
                                        sample: bool = True) -> PrescribedResult:
    """Solve for degree-n forms singular at the nodes, cuspidal along given tangents.

    The sampled member is checked with ``analyze``: each prescribed point must
    have the prescribed type (and tangent) and no other singular point may show
    up within the search bound.
    """
    field = field or GF(31)
    nodes = list(nodes)
    cusps = [(P, L) for P, L in cusps]
    if n < 1:
        raise ConstructionError("degree must be positive")
    p = field.characteristic
    if p and p <= n:
        raise ConstructionError(f"characteristic {p} must exceed the degree {n}")
    allp = nodes + [P for P, _ in cusps]
    if len(set(allp)) != len(allp):
        raise ConstructionError("prescribed points must be distinct")
    for P in allp:
        if P.field is not field:
            raise ConstructionError(f"point {P} is not over {field}")
    M = singularity_conditions(n, nodes, cusps, field)
    basis = mat_kernel(M) if M.nrows else [[field.one if i == j else field.zero for i in range(M.ncols)]
                                          for j in range(M.ncols)]
    rank = M.ncols - len(basis)
    # one Hessian row per cusp is implied by the Euler relation
    conditions = 3 * len(nodes) + 5 * len(cusps)
    if not basis:
        raise ConstructionError(f"empty solution space: {conditions} conditions of rank {rank} "
                                f"on {M.ncols} coefficients")
    if not sample:
        return PrescribedResult(n, len(basis), conditions, rank, None, None, seed, 0)
    rng = _rng(seed)
    for attempt in range(1, RETRIES + 1):
        f = TernaryForm(field, n, tuple(_random_combination(basis, field, rng)))
        if f.is_zero():
            continue
        try:
            if field is QQ:
                a = analyze(f, allp, complete=False,
                            notes=("over the rationals only the prescribed points are verified",))
            else:
                a = analyze(f, max_ext_degree=max_ext_degree, seed=seed)
        except CurveError:
            continue
        if _matches(a, nodes, cusps):
            return PrescribedResult(n, len(basis), conditions, rank, f, a, seed, attempt)
    raise ConstructionError(f"sampled members failed verification after {RETRIES} attempts; try another seed")


def _matches(a: CurveAnalysis, nodes, cusps) -> bool:
    found = {s.point: s for s in a.singular_points}
    if len(found) != len(nodes) + len(cusps):
        return False
    for P in nodes:
        s = found.get(P.base_change(a.field) if P.field is not a.field else P)
        if s is None or s.kind != "node":
            return False
    for P, L in cusps:
        s = found.get(P.base_change(a.field) if P.field is not a.field else P)
        if s is None or s.kind != "cusp":
            return False
        if not s.tangents[0].proportional_to(L.base_change(a.field) if L.field is not a.field else L):
            return False
    return True


def general_points(count: int, field: Field, seed: int = 0):
    """Seeded distinct points, no three collinear, no six on a conic, imposing
    independent conditions in every degree m with h^0(O(m)) >= count."""
    rng = _rng(seed)
    for _ in range(1000):
        pts: list = []
        while len(pts) < count:
            c = [field.random(rng) for _ in range(3)]
            if any(c):
                P = ProjPoint.make(field, c)
                if P not in pts:
                    pts.append(P)
        if _general(pts):
            return pts
    raise ConstructionError("could not find points in general position")


def _general(pts) -> bool:
    from itertools import combinations

    if any(points_position(T, 1).rank < 3 for T in combinations(pts, 3)):
        return False
    if any(points_position(T, 2).rank < 6 for T in combinations(pts, 6)):
        return False
    m = 0
    while (m + 1) * (m + 2) // 2 < len(pts):
        m += 1
    return points_position(pts, m).independent


# ---------------------------------------------------------------------------
# unions with marked points


@dataclass(frozen=True)
class MarkedUnion:
    components: tuple
    marked_points: tuple
    intersections: tuple
    t: int
    n: int
    k: int
    d: int
    criterion_degree: int
    base: CurveAnalysis

    @property
    def criterion_holds(self) -> bool:
        return self.criterion_degree < 0

    @property
    def genus(self) -> int:
        return (self.n - 1) * (self.n - 2) // 2 - self.k - self.d

    @property
    def bookkeeping(self) -> tuple:
        return (self.n, self.k, self.d)

    def union_analysis(self) -> CurveAnalysis:
        """The union with marked points smoothed and other intersections kept as nodes."""
        f = self.components[0] * self.components[1].base_change(self.components[0].field) \
            if self.components[1].field is not self.components[0].field else self.components[0] * self.components[1]
        marked = set(self.marked_points)
        kept = list(self.base.points) + [P for P in self.intersections if P not in marked]
        return analyze(f, kept, complete=self.base.complete, smoothed=self.marked_points,
                       irreducibility="reducible-by-construction",
                       notes=("marked points are smoothed in the modeled family member",))

    def arithmetic_consistent(self) -> bool | None:
        """Compare with the degeneration bookkeeping when the base degree fits n = t + 3 + a."""
        nb, deg_d = self.base.degree, self.components[1].degree
        a = nb - self.t - 3
        if a < 0:
            return None
        ar = degeneration_step_arithmetic(nb, self.t, self.base.d, a, self.base.k)
        if deg_d == 1:
            return ar.line_left == self.d
        return ar.curve_nodes_after == self.d and ar.curve_cusps_after == self.k


def legal_marked_count(component_degree: int, t: int) -> int:
    if component_degree == 1:
        return t + 1
    if component_degree == 2:
        return t * t + 1
    raise ConstructionError("only lines and conics are supported")


def _union(base: CurveAnalysis, D: TernaryForm, marked, t: int, max_ext_degree: int, seed: int) -> MarkedUnion:
    if t < 1:
        raise ConstructionError("t must be positive")
    if D.field is not base.curve.field and not isinstance(base.curve.field, PrimeField):
        raise ConstructionError("component over a different field")
    f = base.curve
    base_field = f.field
    if not isinstance(base_field, PrimeField):
        from .fields import prime_field

        base_field = prime_field(base_field.p) if base_field.characteristic else base_field
    inter = transversal_intersection(_to_prime(f), _to_prime(D), max_ext_degree, seed)
    if inter.verdict != "transversal":
        raise ConstructionError("the component does not meet the curve transversally")
    pts = set(inter.points)
    marked = [P.base_change(inter.field) if P.field is not inter.field else P for P in marked]
    if len(set(marked)) != len(marked):
        raise ConstructionError("marked points repeat")
    for P in marked:
        if P not in pts:
            raise ConstructionError(f"marked point {P} is not an intersection point")
    need = legal_marked_count(D.degree, t)
    if len(marked) != need:
        raise ConstructionError(f"need {need} marked points, got {len(marked)}")
    sing = {s.point.base_change(inter.field) if s.point.field is not inter.field else s.point
            for s in base.singular_points}
    if pts & sing:
        raise ConstructionError("the component passes through a singular point")
    n = base.degree + D.degree
    d = base.d + len(pts) - len(marked)
    crit = h0_preservation_degree(t, D.degree, len(marked))
    return MarkedUnion((f, D), tuple(marked), tuple(inter.points), t, n, base.k, d, crit, base)


def _to_prime(f: TernaryForm) -> TernaryForm:
    if isinstance(f.field, PrimeField):
        return f
    raise ConstructionError("unions are built over prime fields")


def union_with_line(base: CurveAnalysis, line: TernaryForm, marked, t: int = 1,
                    max_ext_degree: int = 2, seed: int = 0) -> MarkedUnion:
    if line.degree != 1:
        raise ConstructionError("expected a line")
    return _union(base, line, marked, t, max_ext_degree, seed)


def union_with_conic(base: CurveAnalysis, conic: TernaryForm, marked, t: int = 2,
                     max_ext_degree: int = 2, seed: int = 0) -> MarkedUnion:
    if not _is_smooth_conic(conic):
        raise ConstructionError("expected a smooth conic")
    return _union(base, conic, marked, t, max_ext_degree, seed)


# ---------------------------------------------------------------------------
# implicitization


def _shift(coeffs: list, c, field: Field) -> list:
    """Coefficients of X(s + c t, t) from those of X(s, t) (index i <-> s^(m-i) t^i)."""
    m = len(coeffs) - 1
    out = [field.zero] * (m + 1)
    for i, ci in enumerate(coeffs):
        if not ci:
            continue
        for k in range(m - i + 1):
            out[i + k] = out[i + k] + ci * field(comb(m - i, k)) * c ** k
    return out


def _eval_binary(coeffs, s, t):
    m = len(coeffs) - 1
    v = 0
    for i, c in enumerate(coeffs):
        v = v + c * s ** (m - i) * t ** i
    return v


def _content_free(f: TernaryForm) -> TernaryForm:
    if f.field is not QQ:
        return f.normalized()
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    first = next(v for v in ints if v)
    if first < 0:
        g = -g
    return TernaryForm(QQ, f.degree, tuple(Fraction(v, g) for v in ints))


def implicitize_rational_curve(X, Y, Z, field: Field) -> TernaryForm:
    """Implicit equation of the image of (s:t) -> (X : Y : Z).

    Inputs are coefficient lists indexed so that entry i multiplies s^(m-i) t^i.
    """
    forms = [[field(c) for c in F] for F in (X, Y, Z)]
    m = len(forms[0]) - 1
    if m < 1 or any(len(F) != m + 1 for F in forms):
        raise ConstructionError("need three binary forms of the same positive degree")
    p = field.characteristic
    if p and p <= m:
        raise ConstructionError(f"characteristic {p} must exceed the degree {m}")
    if any(all(not c for c in F) for F in forms):
        raise ConstructionError("a coordinate form vanishes identically")
    # common root at (1:0) or in the chart s = 1
    if all(not F[0] for F in forms):
        raise ConstructionError("the forms have the common root (1:0)")
    g = forms[0]
    for F in forms[1:]:
        g = upoly.gcd(g, F)
    if len(upoly.trim(g)) > 1:
        raise ConstructionError("the forms have a common root")
    if all(not F[m] for F in forms):
        raise ConstructionError("the forms have the common root (0:1)")
    if mat_rank(ExactMatrix.make(field, forms)) < 3:
        raise ConstructionError("degenerate parametrization: the image is a line")
    orig = forms
    if not forms[0][m]:
        c = next(c for c in _candidates(field) if _eval_binary(forms[0], c, field.one))
        forms = [_shift(F, c, field) for F in forms]
    x, y, z = coordinate_forms(field)
    P = [y.scale(a) - x.scale(b) for a, b in zip(forms[0], forms[1])]
    Q = [z.scale(a) - x.scale(b) for a, b in zip(forms[0], forms[2])]
    from .resultant import sylvester_resultant

    R = sylvester_resultant(P, Q)
    if R.is_zero():
        raise ConstructionError("resultant vanishes identically")
    terms = {}
    for e, cf in R.terms().items():
        if e[0] < m:
            raise ConstructionError("resultant lacks the expected x^m factor")
        terms[(e[0] - m, e[1], e[2])] = cf
    F = _content_free(TernaryForm.from_dict(field, R.degree - m, terms))
    if F.degree != m:
        raise ConstructionError(f"degree collapse: implicit equation has degree {F.degree}")
    if not is_reduced(F):
        raise ConstructionError("the parametrization is not birational onto its image")
    # 2m + 1 sample parameters certify vanishing identically
    samples = 0
    for u in _candidates(field):
        if samples >= 2 * m + 1:
            break
        if F(*[_eval_binary(G, field.one, u) for G in orig]):
            raise AssertionError("implicit equation does not vanish on the parametrization")
        samples += 1
    return F


def _candidates(field: Field):
    if field is QQ:
        i = 0
        while True:
            yield Fraction(i)
            i += 1
    else:
        for i in range(field.characteristic):
            yield field(i)


# ---------------------------------------------------------------------------
# quintic with three cusps


@dataclass(frozen=True)
class QuinticConstruction:
    explicit: CurveAnalysis
    model: CurveAnalysis
    parameters: tuple
    offsets: tuple
    seed: int
    attempts: int


def _rnc5(lam, field):
    return [lam ** k for k in range(6)]


def _rnc5_tangent(lam, field):
    return [field(k) * lam ** (k - 1) if k else field.zero for k in range(6)]


def quintic_3cusps(field: Field | None = None, parameters=None, offsets=None, seed: int = 0,
                   max_ext_degree: int = 3) -> QuinticConstruction:
    """Project the rational normal quintic from a plane meeting three tangent lines.

    The plane quintic is rational, with the three cusps at the images of the
    chosen parameters and three further nodes.  ``model`` is the modeled family
    member in which those nodes are smoothed (k = 3, d = 0, g = 3); ``explicit``
    is the full inventory of the projected curve.
    """
    field = field or GF(101)
    if not isinstance(field, PrimeField) or field.p <= 5:
        raise ConstructionError("needs a prime field of characteristic > 5")
    rng = _rng(seed)
    fixed = parameters is not None
    for attempt in range(1, RETRIES + 1):
        if fixed:
            lams = [field(v) for v in parameters]
            offs = [field(v) for v in (offsets or (1, 1, 1))]
        else:
            lams, offs = [], []
            while len(lams) < 3:
                v = field(rng.randrange(field.p))
                if v not in lams:
                    lams.append(v)
            offs = [field(rng.randrange(1, field.p)) for _ in range(3)]
        if len(set(lams)) != 3 or len(offs) != 3 or any(not o for o in offs):
            raise ConstructionError("need three distinct parameters and nonzero offsets")
        centre = [[a + o * b for a, b in zip(_rnc5(l, field), _rnc5_tangent(l, field))]
                  for l, o in zip(lams, offs)]
        if mat_rank(ExactMatrix.make(field, centre)) != 3:
            if fixed:
                raise ConstructionError("the three points do not span a plane; choose other parameters")
            continue
        proj = mat_kernel(ExactMatrix.make(field, centre))
        try:
            F = implicitize_rational_curve(proj[0], proj[1], proj[2], field)
            explicit = analyze(F, max_ext_degree=max_ext_degree, seed=seed,
                               notes=("image of the projective line",))
        except CurveError:
            if fixed:
                raise ConstructionError("degenerate projection; choose other parameters or reseed")
            continue
        cusp_pts = {ProjPoint.make(field, [sum((l[i] * v for i, v in enumerate(_rnc5(lam, field))), field.zero)
                                          for l in proj]) for lam in lams}
        found_cusps = {s.point for s in explicit.cusps}
        if explicit.k != 3 or explicit.d != 3 or {P.base_change(explicit.field) for P in cusp_pts} != found_cusps:
            if fixed:
                raise ConstructionError(f"projection has {explicit.k} cusps and {explicit.d} nodes, expected 3 and 3")
            continue
        explicit = _with_irreducibility(explicit, "certified")
        cusps = sorted(cusp_pts, key=lambda P: P.sort_key())
        nodes = [s.point for s in explicit.nodes]
        model = analyze(F, cusps, complete=True, smoothed=nodes, irreducibility="assumed",
                        notes=("the three nodes of the projected quintic are smoothed in the modeled member",
                               "inventory of the projection is complete: delta = 6 = arithmetic genus"))
        return QuinticConstruction(explicit, model, tuple(lams), tuple(offs), seed, attempt)
    raise ConstructionError(f"degenerate choices after {RETRIES} attempts; try another seed")


# ---------------------------------------------------------------------------
# cross-ratios on a pencil of conics


def cross_ratio(a, b, c, d):
    """lambda = [ac][bd] / ([bc][ad]) for points of P^1 given as pairs."""
    def br(u, v):
        return u[0] * v[1] - u[1] * v[0]

    num = br(a, c) * br(b, d)
    den = br(b, c) * br(a, d)
    if not den or not num:
        raise ConstructionError("coincident points on P^1")
    return num / den


def j_invariant(lam):
    """256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)."""
    den = lam * lam * (lam - 1) * (lam - 1)
    if not den:
        raise ConstructionError("j is undefined for lambda in {0, 1}")
    u = lam * lam - lam + 1
    return 256 * u * u * u / den


@dataclass(frozen=True)
class CrossRatioReport:
    j1: object
    j2: object
    lambdas: tuple

    @property
    def distinct(self) -> bool:
        return self.j1 != self.j2


def _conic_parameters(C: TernaryForm, base) -> list:
    F = C.field
    O = base[0]
    pencil = mat_kernel(ExactMatrix.make(F, [list(O.coords)]))
    B = ExactMatrix.make(F, [[pencil[0][i], pencil[1][i]] for i in range(3)])

    def coords_of(line):
        # solve line = a e0 + b e1
        from .linalg import solve_affine

        sol = solve_affine(B, list(line))
        if not sol.consistent:
            raise ConstructionError("line not through the base point")
        return tuple(sol.particular)

    out = [coords_of([g(O) for g in C.partials()])]
    for Q in base[1:]:
        line = (O[1] * Q[2] - O[2] * Q[1], O[2] * Q[0] - O[0] * Q[2], O[0] * Q[1] - O[1] * Q[0])
        out.append(coords_of(line))
    return out


def pencil_cross_ratio_check(base, C1: TernaryForm, C2: TernaryForm) -> CrossRatioReport:
    """Compare the j-invariants of the four base points on two conics of the pencil.

    Different j means the two unordered quadruples are not projectively
    equivalent; equal j is only "possibly equivalent".
    """
    from itertools import combinations

    base = list(base)
    if len(base) != 4 or len(set(base)) != 4:
        raise ConstructionError("need four distinct base points")
    for T in combinations(base, 3):
        if points_position(T, 1).rank < 3:
            raise ConstructionError("three base points are collinear")
    lams = []
    for C in (C1, C2):
        if not _is_smooth_conic(C):
            raise ConstructionError("conic is singular")
        for P in base:
            if C(P):
                raise ConstructionError(f"conic does not pass through {P}")
        a, b, c, d = _conic_parameters(C, base)
        lams.append(cross_ratio(a, b, c, d))
    return CrossRatioReport(j_invariant(lams[0]), j_invariant(lams[1]), tuple(lams))


def random_pencil_trial(field: Field, seed: int) -> CrossRatioReport:
    """Four seeded base points, two seeded smooth members of their pencil."""
    from .curves import evaluation_matrix
    from itertools import combinations

    rng = _rng(seed)
    while True:
        base = []
        while len(base) < 4:
            try:
                P = ProjPoint.make(field, [field.random(rng) for _ in range(3)])
            except ValueError:
                continue
            if P not in base:
                base.append(P)
        if all(points_position(T, 1).rank == 3 for T in combinations(base, 3)):
            break
    pencil = mat_kernel(evaluation_matrix(base, 2))
    members = []
    while len(members) < 2:
        C = TernaryForm(field, 2, tuple(_random_combination(pencil, field, rng)))
        if _is_smooth_conic(C) and not any(C.proportional_to(D) for D in members):
            members.append(C)
    return pencil_cross_ratio_check(base, members[0], members[1])

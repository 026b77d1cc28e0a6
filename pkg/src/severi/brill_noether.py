"""The Brill-Noether multiplication map through its polynomial model.

For a geometrically linearly normal nodal-cuspidal curve of degree n with
singular set N, the multiplication H^0(O_C(1)) x H^0(w_C(-1)) -> H^0(w_C) is
the multiplication of linear forms with degree-(n-4) forms through N, landing
in degree-(n-3) forms through N.  Deleting a point from N models the partial
normalization that keeps that point singular.
"""
from __future__ import annotations

from dataclasses import dataclass

from .adjoint import AdjointSystem, adjoint_system_of_points
from .curves import CurveAnalysis, CurveError, points_position
from .forms import TernaryForm, coordinate_forms
from .linalg import ExactMatrix, mat_kernel, mat_rank


@dataclass(frozen=True)
class MuReport:
    n: int
    g: int
    gln: bool
    dim_W: int
    dim_omega_minus_1: int
    dim_omega: int
    domain_dim: int
    rank: int
    ker_dim: int
    surjective: bool
    injective: bool
    rho: int
    kernel: tuple = ()
    label: str = "mu0"

    @property
    def identified(self) -> bool:
        """Whether the polynomial model is the multiplication map of the curve itself."""
        return self.gln

    @property
    def moduli_image_bound(self) -> int:
        """3g - 3 - dim ker, the value exposed next to the kernel dimension."""
        return 3 * self.g - 3 - self.ker_dim


def mu_from_points(points, n: int, field, genus: int | None = None) -> MuReport:
    """Multiplication (x, y, z) x I_N(n-4) -> I_N(n-3) for an explicit point set."""
    pts = list(points)
    if n < 5:
        raise CurveError("the multiplication map needs n >= 5")
    g = genus if genus is not None else (n - 1) * (n - 2) // 2 - len(pts)
    A = adjoint_system_of_points(pts, n - 4, field)
    B = adjoint_system_of_points(pts, n - 3, field)
    gln = points_position(pts, n - 4).independent if pts else True
    lin = coordinate_forms(field)
    cols = []
    for ell in lin:
        for f in A.basis:
            cols.append(B.coordinates(ell * f))
    domain = len(cols)
    if domain and B.dim:
        M = ExactMatrix.make(field, [[cols[j][i] for j in range(domain)] for i in range(B.dim)])
        rank = mat_rank(M)
        ker = mat_kernel(M)
    else:
        rank = 0
        ker = [[field.one if i == j else field.zero for i in range(domain)] for j in range(domain)]
    kernel = tuple(_kernel_as_linear_forms(v, A, field) for v in ker)
    dim_W = n - g + 1 + A.dim
    rho = 3 * n - 2 * g - 6
    return MuReport(n, g, gln, dim_W, A.dim, B.dim, domain, rank, domain - rank, rank == B.dim,
                    rank == domain, rho, kernel, "mu0" if gln else "model not identified with mu0")


def _kernel_as_linear_forms(v, A: AdjointSystem, field):
    """A kernel vector as the linear forms (u_0, ..., u_{a-1}) with sum u_j f_j = 0."""
    a = A.dim
    out = []
    for j in range(a):
        out.append(TernaryForm(field, 1, (v[j], v[a + j], v[2 * a + j])))
    return tuple(out)


def _check(analysis: CurveAnalysis):
    if not analysis.complete:
        raise CurveError("incomplete singular inventory")
    if any(s.kind not in ("node", "cusp") for s in analysis.singular_points):
        raise CurveError("only nodes and cusps are supported")
    if analysis.degree < 5:
        raise CurveError("the multiplication map needs n >= 5")


def mu_map(analysis: CurveAnalysis) -> MuReport:
    _check(analysis)
    return mu_from_points(analysis.points, analysis.degree, analysis.field, analysis.genus)


@dataclass(frozen=True)
class DeletionReport:
    full: MuReport
    deleted: MuReport
    point: object
    applicable: bool
    reasons: tuple
    rank_increment: int

    @property
    def inequality_holds(self) -> bool:
        return self.rank_increment >= 1


def mu_rank_after_delete(analysis: CurveAnalysis, P) -> DeletionReport:
    _check(analysis)
    pts = analysis.points
    if P not in pts:
        raise CurveError(f"{P} is not in the singular inventory")
    full = mu_map(analysis)
    rest = [Q for Q in pts if Q != P]
    deleted = mu_from_points(rest, analysis.degree, analysis.field, analysis.genus + 1)
    reasons = []
    if not full.gln:
        reasons.append("curve is not geometrically linearly normal")
    if not analysis.genus > analysis.degree - 2:
        reasons.append(f"g = {analysis.genus} is not larger than n - 2 = {analysis.degree - 2}")
    return DeletionReport(full, deleted, P, not reasons,
                          tuple(reasons) or ("deletion hypotheses hold",), deleted.rank - full.rank)


@dataclass(frozen=True)
class ModuliVerdict:
    gln: bool
    mu_surjective: bool
    expected_dim_guaranteed: bool
    conclusion: int | None
    note: str

    @property
    def concluded(self) -> bool:
        return self.conclusion is not None


def moduli_verdict(analysis: CurveAnalysis) -> ModuliVerdict:
    """Expected number of moduli 3g - 3 + rho - k when the rank hypotheses hold.

    Hypotheses checked here: linear normality of the normalization and
    surjectivity of the multiplication map.  That the family has the expected
    dimension is an assumption; k < 3n is the arithmetic guarantee we check.
    """
    if any(s.kind not in ("node", "cusp") for s in analysis.singular_points):
        raise CurveError("only nodes and cusps are supported")
    if analysis.genus < 2:
        raise CurveError("the number of moduli is only defined for g >= 2")
    rep = mu_map(analysis)
    n, k, g = analysis.degree, analysis.k, analysis.genus
    expected_dim = k < 3 * n
    if rep.gln and rep.surjective and expected_dim:
        return ModuliVerdict(True, True, True, 3 * g - 3 + rep.rho - k, "all hypotheses verified")
    failed = [name for name, ok in (("geometric linear normality", rep.gln),
                                    ("surjectivity of the multiplication map", rep.surjective),
                                    ("expected dimension (k < 3n)", expected_dim)) if not ok]
    return ModuliVerdict(rep.gln, rep.surjective, expected_dim, None, "not concluded: " + ", ".join(failed))


@dataclass(frozen=True)
class SyzygyCheck:
    passed: bool
    ker_dim: int
    vectors: tuple

    def __bool__(self) -> bool:
        return self.passed


def kernel_syzygy_check(report: MuReport, analysis: CurveAnalysis | None = None) -> SyzygyCheck:
    """With a 3-dimensional adjoint system in degree n-4, the kernel has dimension <= 1."""
    if report.dim_omega_minus_1 != 3:
        raise CurveError(f"needs a 3-dimensional adjoint system, got {report.dim_omega_minus_1}")
    if report.ker_dim <= 1:
        return SyzygyCheck(True, report.ker_dim, ())
    return SyzygyCheck(False, report.ker_dim, report.kernel[:2])

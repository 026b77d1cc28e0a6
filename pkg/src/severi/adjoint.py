"""Adjoint conditions: t-normality by interpolation rank and adjoint linear systems.

For a curve of degree n with only nodes and cusps, the forms of degree
m = n - 3 - t through all singular points model the sections of the canonical
bundle twisted by -t on the normalization (for m < n no multiple of the curve
equation interferes).  The curve is geometrically t-normal exactly when the
singular points impose independent conditions in that degree; when m < 0 it
is t-normal exactly when it is smooth.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveAnalysis, CurveError, evaluation_matrix, points_position
from .forms import TernaryForm, monomial_basis, num_monomials
from .linalg import mat_kernel, rref


def _check_inventory(analysis: CurveAnalysis):
    if not analysis.complete:
        raise CurveError("incomplete singular inventory")
    for s in analysis.singular_points:
        if s.kind not in ("node", "cusp"):
            raise CurveError(f"singular point {s.point} is not a node or cusp")


@dataclass(frozen=True)
class NormalityReport:
    t: int
    m: int
    verdict: bool
    branch: str  # "negative-degree-branch" | "interpolation-branch"
    rank: int | None = None
    independent: bool | None = None
    conditions: int = 0
    outside_hypotheses: bool = False


def is_geometrically_t_normal(analysis: CurveAnalysis, t: int) -> NormalityReport:
    if t < 1:
        raise ValueError("t must be a positive integer")
    _check_inventory(analysis)
    n = analysis.degree
    m = n - 3 - t
    outside = analysis.irreducibility == "reducible-by-construction"
    npts = len(analysis.singular_points)
    if m < 0:
        return NormalityReport(t, m, npts == 0, "negative-degree-branch", conditions=npts,
                               outside_hypotheses=outside)
    pos = points_position(analysis.points, m)
    return NormalityReport(t, m, pos.independent, "interpolation-branch", pos.rank, pos.independent,
                           npts, outside)


@dataclass(frozen=True)
class AdjointSystem:
    m: int
    basis: tuple
    free_columns: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: TernaryForm) -> list:
        """Coordinates of a form of this system in ``basis`` (read off the free columns)."""
        return [f.coeffs[c] for c in self.free_columns]


def adjoint_system_of_points(points, m: int, field) -> AdjointSystem:
    if m < 0:
        return AdjointSystem(m, ())
    pts = list(points)
    ncols = num_monomials(m)
    if not pts:
        basis = tuple(TernaryForm.monomial(field, e) for e in monomial_basis(m))
        return AdjointSystem(m, basis, tuple(range(ncols)))
    E = evaluation_matrix(pts, m)
    ech, piv = rref(E)
    vecs = mat_kernel(E)
    free = tuple(c for c in range(ncols) if c not in set(piv))
    return AdjointSystem(m, tuple(TernaryForm(E.field, m, tuple(v)) for v in vecs), free)


def adjoint_system(analysis: CurveAnalysis, m: int) -> AdjointSystem:
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return adjoint_system_of_points(analysis.points, m, analysis.field)


@dataclass(frozen=True)
class OmegaTwist:
    t: int
    value: int
    formula_value: int
    agrees: bool
    normal: bool


def ideal_dimension_of_curve(n: int, t: int) -> int:
    """h^0 of degree-t forms divisible by a fixed degree-n form."""
    if t < n:
        return 0
    return (t - n + 1) * (t - n + 2) // 2


def h0_omega_minus_t(analysis: CurveAnalysis, t: int) -> OmegaTwist:
    """Adjoint dimension in degree n-3-t, cross-checked with Riemann-Roch.

    The formula side is -n t + g - 1 + (t+1)(t+2)/2 - h^0(I(t)); it agrees with
    the adjoint dimension exactly when the curve is geometrically t-normal.
    """
    _check_inventory(analysis)
    n = analysis.degree
    m = n - 3 - t
    value = adjoint_system(analysis, m).dim if m >= 0 else 0
    g = analysis.genus
    formula = -n * t + g - 1 + (t + 1) * (t + 2) // 2 - ideal_dimension_of_curve(n, t)
    normal = is_geometrically_t_normal(analysis, t).verdict
    return OmegaTwist(t, value, formula, value == formula, normal)

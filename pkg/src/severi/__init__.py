"""Exact computations with nodal-cuspidal plane curves and the numerology of their families."""

__version__ = "0.1.0"

from .fields import GF, QQ
from .forms import ProjPoint, TernaryForm, point
from .curves import CurveAnalysis, CurveError, analyze, classify_singularity, find_singular_points
from .adjoint import adjoint_system, h0_omega_minus_t, is_geometrically_t_normal
from .brill_noether import kernel_syzygy_check, moduli_verdict, mu_map, mu_rank_after_delete
from .numerology import census, classify_family, family_params

__all__ = [
    "GF", "QQ", "ProjPoint", "TernaryForm", "point", "CurveAnalysis", "CurveError", "analyze",
    "classify_singularity", "find_singular_points", "adjoint_system", "h0_omega_minus_t",
    "is_geometrically_t_normal", "kernel_syzygy_check", "moduli_verdict", "mu_map",
    "mu_rank_after_delete", "census", "classify_family", "family_params",
]

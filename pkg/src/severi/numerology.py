"""Closed-form arithmetic for families of plane curves with d nodes and k cusps.

Everything here is integer arithmetic on (n, k, d); no curve is ever built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NumerologyError(ValueError):
    pass


def h0_plane(m: int) -> int:
    """Dimension of the space of degree-m ternary forms (0 for m < 0)."""
    return (m + 1) * (m + 2) // 2 if m >= 0 else 0


def genus_of(n: int, k: int, d: int) -> int:
    return (n - 1) * (n - 2) // 2 - k - d


@dataclass(frozen=True)
class FamilyParams:
    n: int
    k: int
    d: int
    N: int
    g: int
    delta: int
    rho: int
    expected_dim: int
    dim_Mg: int | None
    expected_moduli: int | None
    fibre_lower_bound: int
    expected_dim_guaranteed: bool

    @property
    def expected_moduli_note(self) -> str:
        if self.g < 2:
            return "not defined for g < 2"
        if not self.expected_dim_guaranteed:
            return "conditional on the family having the expected dimension (k >= 3n)"
        return "defined"


def family_params(n: int, k: int, d: int) -> FamilyParams:
    if n < 1 or k < 0 or d < 0:
        raise NumerologyError("need n >= 1 and k, d >= 0")
    g = genus_of(n, k, d)
    if g < 0:
        raise NumerologyError(f"negative genus {g} for (n, k, d) = ({n}, {k}, {d})")
    N = n * (n + 3) // 2
    rho = 3 * n - 2 * g - 6
    expected_dim = 3 * n + g - 1 - k
    assert expected_dim == N - d - 2 * k
    dim_Mg = 3 * g - 3 if g >= 2 else None
    moduli = min(3 * g - 3, 3 * g - 3 + rho - k) if g >= 2 else None
    return FamilyParams(n, k, d, N, g, d + k, rho, expected_dim, dim_Mg, moduli,
                        min(8, rho - k + 8), k < 3 * n)


# ---------------------------------------------------------------------------
# hypothesis systems


@dataclass(frozen=True)
class HypothesisCheck:
    holds: bool
    conditions: dict
    regime: str = ""
    notes: tuple = ()


def t_normal_existence_hypotheses(n: int, k: int, d: int, t: int) -> HypothesisCheck:
    """Sufficient conditions for a geometrically t-normal member with d nodes, k cusps.

    - count: d + k <= h^0(O(n - t - 3))
    - no cusps: t <= n - 3
    - t in {1, 2}: k <= 6
    - t = 3: k <= 6 + floor((n - 8) / 3)
    """
    if t < 1:
        raise NumerologyError("t must be positive")
    conds = {"count": d + k <= h0_plane(n - t - 3)}
    if k == 0:
        conds["t_at_most_n_minus_3"] = t <= n - 3
    if t in (1, 2):
        conds["cusps_at_most_6"] = k <= 6
    if t == 3:
        conds["cusps_at_most_6_plus"] = k <= 6 + (n - 8) // 3
    notes = []
    if k > 0 and t > 3:
        notes.append("cusps are only covered for t <= 3")
    holds = all(conds.values())
    if not holds:
        if not conds["count"]:
            notes.append("the count bound is not sharp in general")
        if not conds.get("cusps_at_most_6", True) or not conds.get("cusps_at_most_6_plus", True):
            notes.append("the cusp bound is not sharp: examples with more cusps are known")
    return HypothesisCheck(holds, conds, "", tuple(notes))


def maximal_rank_hypotheses(n: int, k: int, d: int) -> HypothesisCheck:
    """Conditions under which rho <= 0 families have the expected number of moduli.

    k + d <= (n-2)(n-3)/2, then k <= 6 + floor((n-8)/3) when g >= 3n - 9 and
    n >= 6, otherwise k <= 6.
    """
    if n < 4:
        raise NumerologyError("needs n >= 4")
    g = genus_of(n, k, d)
    conds = {"count": k + d <= (n - 2) * (n - 3) // 2}
    if g >= 3 * n - 9 and n >= 6:
        regime = "large-genus"
        conds["cusp_bound"] = k <= 6 + (n - 8) // 3
    else:
        regime = "small-genus"
        conds["cusp_bound"] = k <= 6
    notes = () if all(conds.values()) else ("bounds are sufficient, not necessary",)
    return HypothesisCheck(all(conds.values()), conds, regime, notes)


def ramified_series_exists(g: int, n: int, r: int, b: Sequence[int]) -> bool:
    """Existence on a general curve of a g^r_n with ramification at least b at a general point.

    The criterion is sum over i of max(b_i + g - n + r, 0) <= g.
    """
    b = list(b)
    if r < 1 or n < 1 or g < 0:
        raise NumerologyError("need r >= 1, n >= 1, g >= 0")
    if len(b) != r + 1 or any((not isinstance(x, int)) or x < 0 for x in b):
        raise NumerologyError(f"ramification sequence must be {r + 1} nonnegative integers")
    return sum(max(x + g - n + r, 0) for x in b) <= g


# ---------------------------------------------------------------------------
# verdicts

GENERAL_FLAGS = ("general_moduli_large_degree", "general_moduli_few_cusps", "general_moduli_one_cusp")

PROVENANCE = {
    "special_moduli": "rho < k with g >= 2: the general curve of genus g has no plane model with k cusps",
    "general_moduli_large_degree": "n > 2g - 1 + 2k: cuspidal models exist on the general curve",
    "general_moduli_few_cusps": "k <= 3 and rho >= 2k: ramified linear series on the general curve",
    "general_moduli_one_cusp": "k = 1 and rho = 1: one-cusp families dominate moduli",
    "expected_moduli_one_cusp": "k = 1: expected number of moduli for every admissible d",
    "expected_moduli_maximal_rank": "rho <= 0 with the node/cusp bounds: multiplication map of maximal rank",
    "nonempty_t_normal": "node/cusp bounds for a geometrically t-normal member",
    "moduli_upper_bound": "k < 3n: number of moduli at most min(3g - 3, 3g - 3 + rho - k)",
    "unknown": "no criterion applies",
}


@dataclass(frozen=True)
class ClassificationVerdict:
    flags: tuple
    provenance: dict

    def has(self, name: str) -> bool:
        return any(f == name or f.startswith(name + "(") for f in self.flags)

    @property
    def general(self) -> bool:
        return any(self.has(f) for f in GENERAL_FLAGS)

    @property
    def special(self) -> bool:
        return self.has("special_moduli")

    @property
    def expected_moduli(self) -> bool:
        """Whether some flag asserts the expected number of moduli."""
        if self.has("expected_moduli_maximal_rank") or self.has("expected_moduli_one_cusp"):
            return True
        return self.general


def classify_family(n: int, k: int, d: int) -> ClassificationVerdict:
    P = family_params(n, k, d)
    g, rho = P.g, P.rho
    flags: list[str] = []
    prov: dict = {}

    def add(name, key=None):
        flags.append(name)
        prov[name] = PROVENANCE[key or name]

    for t in (1, 2, 3):
        if t <= n - 3 and t_normal_existence_hypotheses(n, k, d, t).holds:
            add(f"nonempty_t_normal({t})", "nonempty_t_normal")
    if g >= 2:
        if rho < k:
            add("special_moduli")
        if n > 2 * g - 1 + 2 * k:
            add("general_moduli_large_degree")
        if k <= 3 and rho >= 2 * k:
            add("general_moduli_few_cusps")
        if k == 1 and rho == 1:
            add("general_moduli_one_cusp")
        if k == 1:
            add("expected_moduli_one_cusp")
        if rho <= 0 and n >= 4 and maximal_rank_hypotheses(n, k, d).holds:
            add("expected_moduli_maximal_rank")
        if k < 3 * n:
            add("moduli_upper_bound")
    if not any(not f.startswith("moduli_upper_bound") for f in flags):
        add("unknown")
    verdict = ClassificationVerdict(tuple(flags), prov)
    if verdict.general and verdict.special:
        raise AssertionError(f"contradictory flags for {(n, k, d)}")
    return verdict


@dataclass(frozen=True)
class CensusRow:
    params: FamilyParams
    verdict: ClassificationVerdict

    def as_dict(self) -> dict:
        p = self.params
        return {
            "n": p.n, "k": p.k, "d": p.d, "N": p.N, "g": p.g, "delta": p.delta, "rho": p.rho,
            "expected_dim": p.expected_dim, "dim_Mg": p.dim_Mg, "expected_moduli": p.expected_moduli,
            "fibre_lower_bound": p.fibre_lower_bound,
            "expected_dim_guaranteed": p.expected_dim_guaranteed,
            "flags": list(self.verdict.flags),
        }


def census(n_range: Iterable[int], k_range: Iterable[int], d_range: Iterable[int] | None = None) -> list[CensusRow]:
    ns, ks = list(n_range), list(k_range)
    ds = list(d_range) if d_range is not None else None
    if not ns or not ks or (ds is not None and not ds):
        raise NumerologyError("ranges must be nonempty")
    rows = []
    for n in ns:
        pa = (n - 1) * (n - 2) // 2
        for k in ks:
            for d in (ds if ds is not None else range(0, pa - k + 1)):
                if n < 1 or k < 0 or d < 0 or genus_of(n, k, d) < 0:
                    continue
                rows.append(CensusRow(family_params(n, k, d), classify_family(n, k, d)))
    return rows


# ---------------------------------------------------------------------------
# degeneration bookkeeping


@dataclass(frozen=True)
class DegenerationArithmetic:
    n: int
    t: int
    a: int
    nodes_before: int
    line_left: int
    line_right: int
    line_holds: bool
    count_is_extremal: bool
    curve_nodes_after: int
    curve_cusps_after: int
    curve_left: int
    curve_right: int
    curve_holds: bool

    @property
    def holds(self) -> bool:
        checks = [self.curve_holds] if self.t <= 3 else []
        if self.nodes_before == h0_plane(self.a):
            checks.append(self.line_holds)
        return all(checks)


def degeneration_step_arithmetic(n: int, t: int, nodes_before: int, a: int, cusps_before: int = 0) -> DegenerationArithmetic:
    """Node bookkeeping when a curve of degree n absorbs a line, or a curve of degree t.

    Line step: nodes_before + n - t - 1 against h^0(O(a + 1)), where n = t + 3 + a
    and nodes_before = h^0(O(a)) is the extremal count.  Degree-t step (t <= 3,
    a cuspidal cubic when t = 3): the union keeps nodes_before + n t - t^2 - 1
    nodes and gains (t^2 - 3t + 2)/2 cusps; with nodes_before + cusps_before =
    h^0(O(n - t - 3)) the total is h^0(O(n - 3)), the extremal count for the
    degree n + t curve at the same t.
    """
    if a < 0 or t < 1:
        raise NumerologyError("need a >= 0 and t >= 1")
    if n != t + 3 + a:
        raise NumerologyError(f"n = {n} does not match t + 3 + a = {t + 3 + a}")
    left = nodes_before + n - t - 1
    right = ((a + 1) ** 2 + 3 * (a + 1) + 2) // 2
    extremal = nodes_before + cusps_before == h0_plane(a)
    nodes_after = nodes_before + n * t - t * t - 1
    cusps_after = cusps_before + (t * t - 3 * t + 2) // 2 if t <= 3 else cusps_before
    c_left = nodes_after + cusps_after
    c_right = h0_plane(n - 3)
    return DegenerationArithmetic(n, t, a, nodes_before, left, right, left == right, extremal,
                                  nodes_after, cusps_after, c_left, c_right, c_left == c_right)


def h0_preservation_degree(t: int, component_degree: int, marked: int) -> int:
    """Degree of O_D(t) twisted down by the marked points; negative means no new sections."""
    return t * component_degree - marked

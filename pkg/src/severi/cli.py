"""Command line entry point.

Exit codes: 0 success, 1 a verification or claim failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .adjoint import h0_omega_minus_t, is_geometrically_t_normal
from .brill_noether import moduli_verdict, mu_map, mu_rank_after_delete
from .constructions import (curve_with_prescribed_singularities, quintic_3cusps,
                            tricuspidal_quartic, union_with_conic, union_with_line, zariski_sextic)
from .curves import CurveAnalysis, CurveError, analyze
from .fields import GF, QQ, FieldError, PrimeField, is_prime
from .io import (CurveFile, InputError, analysis_to_json, canonical_dumps, census_rows_to_text,
                 curve_file_from_analysis, dumps_curve, field_from_json,
                 form_from_coefficients, parse_curve, point_from_json, point_to_json, read_curve, report)
from .numerology import NumerologyError, census, classify_family, family_params

PRIME_ENV = "SEVERI_PRIME"
RECIPE_KINDS = ("tricuspidal-quartic", "zariski-sextic", "quintic-3cusps", "prescribed", "union-line",
                "union-conic")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="severi", description="Exact computations with nodal-cuspidal plane curves.")
    p.add_argument("--version", action="version", version=f"severi {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify singular points and compute the genus")
    a.add_argument("curve")
    a.add_argument("--t", type=int, help="also decide geometric t-normality")
    a.add_argument("--ext", type=int, default=2, help="search extensions up to this degree (default 2)")
    a.add_argument("--seed", type=int, default=0)

    n = sub.add_parser("normality", help="decide geometric t-normality")
    n.add_argument("curve")
    n.add_argument("--t", type=int, required=True)
    n.add_argument("--ext", type=int, default=2)
    n.add_argument("--seed", type=int, default=0)

    m = sub.add_parser("mu", help="rank and kernel of the multiplication map")
    m.add_argument("curve")
    m.add_argument("--delete-point", type=int, help="index into the singular inventory")
    m.add_argument("--ext", type=int, default=2)
    m.add_argument("--seed", type=int, default=0)

    pr = sub.add_parser("params", help="numerology of the family (n, k, d)")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--d", type=int, required=True)

    c = sub.add_parser("census", help="numerology over ranges of (n, k, d)")
    c.add_argument("--n", type=_range, required=True)
    c.add_argument("--k", type=_range, required=True)
    c.add_argument("--d", type=_range)
    c.add_argument("--out")
    c.add_argument("--format", choices=("json", "csv", "md"), default="json")

    k = sub.add_parser("construct", help="build a curve from a recipe name or JSON recipe file")
    k.add_argument("recipe")
    k.add_argument("--seed", type=int)
    k.add_argument("--p", type=int, help=f"prime for the field (default ${PRIME_ENV} or the recipe default)")
    k.add_argument("--out", required=True)

    v = sub.add_parser("verify-paper", help="run the self-check suite")
    v.add_argument("--fast", action="store_true")
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.add_argument("--item", type=int, action="append", help="run only this item (repeatable)")
    v.add_argument("--tamper", type=int, action="append", default=[], help=argparse.SUPPRESS)
    return p


def _emit(obj) -> None:
    sys.stdout.write(canonical_dumps(obj))


# ---------------------------------------------------------------------------
# curve loading


def load_analysis(path: str, ext: int = 2, seed: int = 0) -> tuple[CurveFile, CurveAnalysis]:
    cf = read_curve(path)
    kept = [s.point for s in cf.singularities if not s.smoothed]
    smoothed = [s.point for s in cf.singularities if s.smoothed]
    if cf.declared:
        a = analyze(cf.form, kept, complete=bool(cf.inventory_complete), smoothed=smoothed, seed=seed)
        for s in cf.singularities:
            if s.kind is None:
                continue
            found = next((x for x in a.singular_points + a.smoothed if _same_point(x.point, s.point)), None)
            if found is not None and found.kind != s.kind:
                raise CurveError(f"declared {s.kind} at {s.point} is a {found.kind}")
        return cf, a
    if cf.field is QQ:
        raise InputError("over the rationals the singular points must be declared in the curve file")
    return cf, analyze(cf.form, max_ext_degree=ext, seed=seed)


def _same_point(P, Q) -> bool:
    if P.field is Q.field:
        return P == Q
    if isinstance(P.field, PrimeField):
        P, Q = Q, P
    return isinstance(Q.field, PrimeField) and P == Q.base_change(P.field)


def _normality_json(rep) -> dict:
    return {"t": rep.t, "m": rep.m, "verdict": rep.verdict, "branch": rep.branch, "rank": rep.rank,
            "conditions": rep.conditions, "outside_hypotheses": rep.outside_hypotheses,
            "provenance": {"verdict": "computed"}}


def _mu_json(m) -> dict:
    return {
        "n": m.n, "g": m.g, "gln": m.gln, "label": m.label, "dim_W": m.dim_W,
        "h0_omega_minus_1": m.dim_omega_minus_1, "h0_omega": m.dim_omega,
        "domain_dim": m.domain_dim, "rank": m.rank, "ker_dim": m.ker_dim,
        "surjective": m.surjective, "injective": m.injective, "rho": m.rho,
        "moduli_image_bound": m.moduli_image_bound,
        "kernel": [[str(u) for u in vec] for vec in m.kernel],
        "provenance": {"rank": "computed", "ker_dim": "computed", "dim_W": "computed",
                       "moduli_image_bound": "computed"},
    }


def _annotations(a: CurveAnalysis) -> list:
    out = []
    if not a.complete:
        out.append("singular inventory not known to be complete")
    elif not a.completeness.startswith("exhaustive"):
        out.append("inventory completeness is assumed from the curve file or construction")
    if a.irreducibility != "certified":
        out.append(f"irreducibility: {a.irreducibility}")
    if a.field.characteristic:
        out.append(f"computed over {a.field}; nothing is claimed about characteristic 0")
    return out + list(a.notes)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    cf, a = load_analysis(args.curve, args.ext, args.seed)
    results = {"analysis": analysis_to_json(a)}
    if args.t is not None:
        results["normality"] = _normality_json(is_geometrically_t_normal(a, args.t))
    _emit(report("analyze", {"curve": args.curve, "ext": args.ext, "seed": args.seed, "t": args.t},
                 results, a.field, _annotations(a)))
    return 0


def cmd_normality(args) -> int:
    cf, a = load_analysis(args.curve, args.ext, args.seed)
    rep = is_geometrically_t_normal(a, args.t)
    results = {"normality": _normality_json(rep), "k": a.k, "d": a.d, "genus": a.genus}
    if rep.m >= 0:
        tw = h0_omega_minus_t(a, args.t)
        results["h0_omega_minus_t"] = {"adjoint_dim": tw.value, "riemann_roch": tw.formula_value,
                                       "agree": tw.agrees}
    _emit(report("normality", {"curve": args.curve, "t": args.t, "ext": args.ext, "seed": args.seed},
                 results, a.field, _annotations(a)))
    return 0


def cmd_mu(args) -> int:
    cf, a = load_analysis(args.curve, args.ext, args.seed)
    results = {"mu": _mu_json(mu_map(a))}
    if a.genus >= 2:
        v = moduli_verdict(a)
        results["moduli"] = {"conclusion": v.conclusion, "note": v.note,
                             "provenance": "computed" if v.concluded else "not concluded"}
    if args.delete_point is not None:
        pts = a.points
        if not 0 <= args.delete_point < len(pts):
            raise InputError(f"--delete-point must be in 0..{len(pts) - 1}")
        d = mu_rank_after_delete(a, pts[args.delete_point])
        results["deletion"] = {
            "point": point_to_json(d.point), "deleted": _mu_json(d.deleted),
            "rank_increment": d.rank_increment, "inequality_holds": d.inequality_holds,
            "hypotheses_hold": d.applicable, "reasons": list(d.reasons),
        }
    _emit(report("mu", {"curve": args.curve, "delete_point": args.delete_point}, results, a.field,
                 _annotations(a)))
    return 0


def cmd_params(args) -> int:
    P = family_params(args.n, args.k, args.d)
    V = classify_family(args.n, args.k, args.d)
    print(f"n={P.n} k={P.k} d={P.d}")
    print(f"N={P.N} g={P.g} delta={P.delta} rho={P.rho}")
    print(f"expected_dim={P.expected_dim} dim_Mg={P.dim_Mg if P.dim_Mg is not None else 'n/a'} "
          f"expected_moduli={P.expected_moduli if P.expected_moduli is not None else 'n/a'}")
    print(f"fibre_lower_bound={P.fibre_lower_bound} expected_dim_guaranteed={P.expected_dim_guaranteed}")
    for f in V.flags:
        key = f.split("(")[0]
        print(f"flag {f}: {V.provenance.get(f, V.provenance.get(key, ''))}")
    return 0


def cmd_census(args) -> int:
    rows = [r.as_dict() for r in census(args.n, args.k, args.d)]
    text = census_rows_to_text(rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _default_prime(args, fallback: int) -> int:
    p = args.p
    if p is None and os.environ.get(PRIME_ENV):
        try:
            p = int(os.environ[PRIME_ENV])
        except ValueError:
            raise InputError(f"{PRIME_ENV} must be an integer")
    p = fallback if p is None else p
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    return p


def _load_recipe(text: str) -> dict:
    if text in RECIPE_KINDS:
        return {"kind": text}
    try:
        with open(text, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError:
        raise InputError(f"unknown recipe {text!r}; expected one of {', '.join(RECIPE_KINDS)} or a JSON file")
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid recipe JSON: {exc}")
    if not isinstance(data, dict) or data.get("kind") not in RECIPE_KINDS:
        raise InputError(f"recipe needs a kind in {', '.join(RECIPE_KINDS)}")
    return data


def _recipe_field(recipe: dict, args, fallback: int):
    if "field" in recipe:
        F = field_from_json(recipe["field"])
        if args.p is not None and F.characteristic != args.p:
            return GF(_default_prime(args, fallback))
        return F
    return GF(_default_prime(args, fallback))


def build_from_recipe(recipe: dict, args) -> tuple[CurveAnalysis, dict]:
    """Run a recipe; returns the analysis and extra report fields."""
    try:
        return _build(recipe, args)
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed recipe: {exc!r}") from exc


def _build(recipe: dict, args) -> tuple[CurveAnalysis, dict]:
    kind = recipe.get("kind")
    seed = args.seed if args.seed is not None else recipe.get("seed", 0)
    params = recipe.get("parameters", {})
    if kind == "tricuspidal-quartic":
        explicit_prime = args.p is not None or os.environ.get(PRIME_ENV) or "field" in recipe
        F = _recipe_field(recipe, args, 31) if explicit_prime else QQ
        return tricuspidal_quartic(F), {"seed": seed}
    if kind == "zariski-sextic":
        F = _recipe_field(recipe, args, 31)
        z = zariski_sextic(F, seed=seed)
        return z.analysis, {"seed": seed, "conic": str(z.conic), "cubic": str(z.cubic), "attempts": z.attempts}
    if kind == "quintic-3cusps":
        F = _recipe_field(recipe, args, 101)
        q = quintic_3cusps(F, params.get("parameters"), params.get("offsets"), seed=seed)
        return q.model, {"seed": seed, "parameters": [F.format(v) for v in q.parameters],
                         "offsets": [F.format(v) for v in q.offsets],
                         "explicit": analysis_to_json(q.explicit), "attempts": q.attempts}
    if kind == "prescribed":
        F = _recipe_field(recipe, args, 31)
        n = params.get("degree")
        nodes = [point_from_json(F, P) for P in params.get("nodes", [])]
        cusps = []
        for c in params.get("cusps", []):
            L = form_from_coefficients(F, 1, [{"exponents": e, "value": v} for e, v in
                                              zip(([1, 0, 0], [0, 1, 0], [0, 0, 1]), c["tangent"])])
            cusps.append((point_from_json(F, c["point"]), L))
        r = curve_with_prescribed_singularities(n, nodes, cusps, F, seed=seed)
        return r.analysis, {"seed": seed, "solution_dim": r.solution_dim, "conditions": r.conditions,
                            "rank": r.rank, "attempts": r.attempts}
    if kind in ("union-line", "union-conic"):
        base_spec = recipe.get("base")
        if not isinstance(base_spec, dict) or len(base_spec) != 1 or not ({"recipe", "curve"} & set(base_spec)):
            raise InputError('union recipes need "base": {"recipe": {...}} or {"curve": {...}}')
        if "recipe" in base_spec:
            base, _ = build_from_recipe(base_spec["recipe"], args)
        else:
            base = _analysis_of_curve(base_spec["curve"])
        F = base.curve.field
        comp = form_from_coefficients(F, params.get("degree", 1 if kind == "union-line" else 2),
                                      params.get("component", []))
        from .fields import extension_field

        e = params.get("marked_ext_degree", 1)
        MF = extension_field(F.characteristic, e) if e > 1 else F
        marked = [point_from_json(MF, P) for P in params.get("marked", [])]
        t = params.get("t", 1 if kind == "union-line" else 2)
        fn = union_with_line if kind == "union-line" else union_with_conic
        U = fn(base, comp, marked, t, seed=seed)
        extra = {"seed": seed, "bookkeeping": {"n": U.n, "k": U.k, "d": U.d, "g": U.genus},
                 "criterion_degree": U.criterion_degree, "criterion_holds": U.criterion_holds,
                 "matches_degeneration_arithmetic": U.arithmetic_consistent(),
                 "marked": [point_to_json(P) for P in U.marked_points]}
        return U.union_analysis(), extra
    raise InputError(f"unknown recipe kind {kind!r}")


def _analysis_of_curve(data: dict) -> CurveAnalysis:
    cf = parse_curve(data)
    kept = [s.point for s in cf.singularities if not s.smoothed]
    if cf.declared:
        return analyze(cf.form, kept, complete=bool(cf.inventory_complete),
                       smoothed=[s.point for s in cf.singularities if s.smoothed])
    return analyze(cf.form)


def cmd_construct(args) -> int:
    recipe = _load_recipe(args.recipe)
    a, extra = build_from_recipe(recipe, args)
    cf = curve_file_from_analysis(a)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dumps_curve(cf))
    _emit(report("construct", {"recipe": recipe, "seed": extra.get("seed"), "out": args.out},
                 {"analysis": analysis_to_json(a), "construction": extra}, a.field, _annotations(a)))
    return 0


def cmd_verify(args) -> int:
    from .verify import verify_paper

    rep = verify_paper(fast=args.fast, tamper=args.tamper, only=args.item)
    if args.json:
        _emit(rep.as_dict())
    else:
        for line in rep.lines():
            print(line)
        n_pass = sum(i.passed for i in rep.items)
        n_skip = sum(i.skipped for i in rep.items)
        print(f"{n_pass} passed, {len(rep.items) - n_pass - n_skip} failed, {n_skip} skipped")
    return 0 if rep.ok else 1


COMMANDS = {
    "analyze": cmd_analyze, "normality": cmd_normality, "mu": cmd_mu, "params": cmd_params,
    "census": cmd_census, "construct": cmd_construct, "verify-paper": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"severi: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InputError, FieldError, NumerologyError) as exc:
        print(f"severi: input error: {exc}", file=sys.stderr)
        return 2
    except CurveError as exc:
        print(f"severi: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"severi: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""JSON curve files, recipes and reports.

Curve file layout::

    {"field": {"kind": "prime-field", "p": 31, "ext_degree": 1},
     "degree": 4,
     "coefficients": [{"exponents": [2, 2, 0], "value": "1"}, ...],
     "singularities": [{"point": ["1", "0", "0"], "kind": "cusp"}],   # optional
     "inventory_complete": true}                                      # optional

Values are text: integers, fractions "p/q", residues, or "c0,c1,..." for
elements of an extension field.  ``canonical_dumps`` gives the byte-exact form
used for hashing and round trips.
"""
from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass

from .curves import CurveAnalysis, SingularPoint
from .fields import QQ, Field, FieldError, FieldSpec, PrimeField, extension_field, field_from_spec, is_prime
from .forms import FormError, ProjPoint, TernaryForm, monomial_basis

FORMAT_VERSION = 1


class InputError(ValueError):
    """Malformed user input (exit code 2 on the command line)."""


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# fields


def field_to_json(F: Field) -> dict:
    if F is QQ:
        return {"kind": "rationals"}
    e = getattr(F, "e", 1)
    return {"kind": "prime-field", "p": F.characteristic, "ext_degree": e}


def field_from_json(data) -> Field:
    if not isinstance(data, dict):
        raise InputError("field descriptor must be an object")
    kind = data.get("kind")
    if kind == "rationals":
        _reject_unknown(data, {"kind"}, "field")
        return QQ
    if kind == "prime-field":
        _reject_unknown(data, {"kind", "p", "ext_degree"}, "field")
        p = data.get("p")
        e = data.get("ext_degree", 1)
        if not isinstance(p, int) or not isinstance(e, int) or isinstance(p, bool) or e < 1:
            raise InputError("prime field needs integer p and ext_degree >= 1")
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        return field_from_spec(FieldSpec("prime-field", p, e))
    raise InputError(f"unknown field kind {kind!r}")


def _reject_unknown(data: dict, allowed: set, where: str):
    extra = set(data) - allowed
    if extra:
        raise InputError(f"unknown keys in {where}: {', '.join(sorted(extra))}")


def _parse_value(F: Field, text) -> object:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InputError(f"values must be text, got {text!r}")
    try:
        return F.parse(str(text))
    except (FieldError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse {text!r} over {F}: {exc}") from exc


def point_to_json(P: ProjPoint) -> list:
    return [P.field.format(c) for c in P.coords]


def point_from_json(F: Field, data) -> ProjPoint:
    if not isinstance(data, list) or len(data) != 3:
        raise InputError("a point is a list of three values")
    try:
        return ProjPoint.make(F, [_parse_value(F, v) for v in data])
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# curve files


@dataclass(frozen=True)
class DeclaredSingularity:
    point: ProjPoint
    kind: str | None = None
    smoothed: bool = False


@dataclass(frozen=True)
class CurveFile:
    form: TernaryForm
    singularities: tuple = ()
    inventory_complete: bool | None = None

    @property
    def field(self) -> Field:
        return self.form.field

    @property
    def declared(self) -> bool:
        return bool(self.singularities) or self.inventory_complete is not None

    def __eq__(self, other):
        if not isinstance(other, CurveFile):
            return NotImplemented
        return (self.form.field is other.form.field and self.form == other.form
                and self.singularities == other.singularities
                and self.inventory_complete == other.inventory_complete)

    __hash__ = None


_CURVE_KEYS = {"field", "degree", "coefficients", "singularities", "inventory_complete"}
_SING_KEYS = {"point", "kind", "smoothed", "point_ext_degree"}


def form_from_coefficients(F: Field, degree, coefficients) -> TernaryForm:
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
        raise InputError("degree must be a nonnegative integer")
    if not isinstance(coefficients, list):
        raise InputError("coefficients must be a list")
    terms = {}
    for entry in coefficients:
        if not isinstance(entry, dict):
            raise InputError("each coefficient is an object")
        _reject_unknown(entry, {"exponents", "value"}, "coefficient")
        exps = entry.get("exponents")
        if (not isinstance(exps, list) or len(exps) != 3
                or any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in exps)):
            raise InputError("exponents must be three nonnegative integers")
        if sum(exps) != degree:
            raise InputError(f"exponents {exps} do not sum to the degree {degree}")
        key = tuple(exps)
        if key in terms:
            raise InputError(f"exponents {exps} listed twice")
        terms[key] = _parse_value(F, entry.get("value"))
    try:
        return TernaryForm.from_dict(F, degree, terms)
    except FormError as exc:
        raise InputError(str(exc)) from exc


def coefficients_to_json(f: TernaryForm) -> list:
    return [{"exponents": list(e), "value": f.field.format(c)}
            for e, c in zip(monomial_basis(f.degree), f.coeffs) if c]


def parse_curve(data) -> CurveFile:
    if not isinstance(data, dict):
        raise InputError("a curve file is a JSON object")
    _reject_unknown(data, _CURVE_KEYS, "curve file")
    for key in ("field", "degree", "coefficients"):
        if key not in data:
            raise InputError(f"missing key {key!r}")
    F = field_from_json(data["field"])
    f = form_from_coefficients(F, data["degree"], data["coefficients"])
    sings = []
    for entry in data.get("singularities", []):
        if not isinstance(entry, dict):
            raise InputError("each singularity is an object")
        _reject_unknown(entry, _SING_KEYS, "singularity")
        PF = F
        if "point_ext_degree" in entry:
            e = entry["point_ext_degree"]
            if F is QQ or not isinstance(e, int) or e < 1:
                raise InputError("point_ext_degree needs a prime field and a positive integer")
            PF = extension_field(F.characteristic, e)
        kind = entry.get("kind")
        if kind not in (None, "node", "cusp"):
            raise InputError(f"unknown singularity kind {kind!r}")
        smoothed = entry.get("smoothed", False)
        if not isinstance(smoothed, bool):
            raise InputError("smoothed must be a boolean")
        sings.append(DeclaredSingularity(point_from_json(PF, entry.get("point")), kind, smoothed))
    complete = data.get("inventory_complete")
    if complete is not None and not isinstance(complete, bool):
        raise InputError("inventory_complete must be a boolean")
    return CurveFile(f, tuple(sings), complete)


def serialize_curve(cf: CurveFile) -> dict:
    out = {
        "field": field_to_json(cf.field),
        "degree": cf.form.degree,
        "coefficients": coefficients_to_json(cf.form),
    }
    if cf.singularities:
        rows = []
        for s in cf.singularities:
            row = {"point": point_to_json(s.point)}
            if s.kind is not None:
                row["kind"] = s.kind
            if s.smoothed:
                row["smoothed"] = True
            if s.point.field is not cf.field:
                row["point_ext_degree"] = getattr(s.point.field, "e", 1)
            rows.append(row)
        out["singularities"] = rows
    if cf.inventory_complete is not None:
        out["inventory_complete"] = cf.inventory_complete
    return out


def loads_curve(text: str) -> CurveFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return parse_curve(data)


def dumps_curve(cf: CurveFile) -> str:
    return canonical_dumps(serialize_curve(cf))


def read_curve(path: str) -> CurveFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads_curve(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def curve_file_from_analysis(a: CurveAnalysis) -> CurveFile:
    """Curve file that records the inventory of an analysis (smoothed points flagged)."""
    sings = [DeclaredSingularity(s.point, s.kind) for s in a.singular_points]
    sings += [DeclaredSingularity(s.point, s.kind, True) for s in a.smoothed]
    return CurveFile(_downcast(a.curve), tuple(sings), a.complete)


def _downcast(f: TernaryForm) -> TernaryForm:
    """Move a form with prime-subfield coefficients back to the prime field."""
    F = f.field
    if F is QQ or isinstance(F, PrimeField):
        return f
    if not all(c.in_prime_field() for c in f.coeffs):
        return f
    base = F.base
    return TernaryForm(base, f.degree, tuple(base(c.c[0]) for c in f.coeffs))


# ---------------------------------------------------------------------------
# reports


def singular_point_to_json(s: SingularPoint) -> dict:
    return {
        "point": point_to_json(s.point),
        "kind": s.kind,
        "tangents": [str(t) for t in s.tangents],
        "delta": s.delta,
    }


def analysis_to_json(a: CurveAnalysis) -> dict:
    complete_prov = "computed" if a.completeness.startswith("exhaustive") else "assumed"
    return {
        "degree": a.degree,
        "field": field_to_json(a.field),
        "equation": str(a.curve),
        "k": a.k,
        "d": a.d,
        "genus": a.genus,
        "singular_points": [singular_point_to_json(s) for s in a.singular_points],
        "smoothed_points": [singular_point_to_json(s) for s in a.smoothed],
        "completeness": a.completeness,
        "inventory_complete": a.complete,
        "closure_certified": a.closure_certified,
        "irreducibility": a.irreducibility,
        "notes": list(a.notes),
        "provenance": {
            "k": "computed", "d": "computed", "genus": "computed",
            "inventory_complete": complete_prov,
            "irreducibility": "computed" if a.irreducibility == "certified" else "assumed",
        },
    }


def report(command: str, inputs: dict, results: dict, field: Field | None = None,
           annotations: list | None = None) -> dict:
    from . import __version__

    out = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "annotations": list(annotations or []),
        "tool_version": __version__,
    }
    if field is not None:
        out["field"] = field_to_json(field)
    return out


def census_rows_to_text(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return canonical_dumps(rows)
    cols = ["n", "k", "d", "N", "g", "delta", "rho", "expected_dim", "dim_Mg", "expected_moduli",
            "fibre_lower_bound", "expected_dim_guaranteed", "flags"]
    def cell(r, c):
        v = r[c]
        if c == "flags":
            return ";".join(v)
        return "" if v is None else str(v)

    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([cell(r, c) for c in cols])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in rows:
            lines.append("| " + " | ".join(cell(r, c) for c in cols) + " |")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown format {fmt!r}")

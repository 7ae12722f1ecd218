"""JSON formats for fields, series, polynomials, curves, ideals and plans.

Rationals are strings ``"p/q"``; elements of a proper extension are lists of
such strings (the residue coefficients, constant term first).
"""
from __future__ import annotations

import itertools
import json
from typing import Any

from .coeffs import QQ, NumberField, format_rational
from .curve import BranchParam, BranchSeed, Curve, hensel_lift_branch, sqh_parametrize
from .ideal import PRESETS, FractionalIdeal
from .poly import Poly, poly_eval_series
from .series import INF, SeriesVector, TruncatedSeries

__all__ = [
    "InputError",
    "field_from_json",
    "series_to_json",
    "series_from_json",
    "poly_to_json",
    "poly_from_json",
    "curve_from_json",
    "ideal_from_json",
    "plan_from_json",
    "value_to_json",
    "load_json",
]

COORD_NAMES = ("x", "y", "z", "w")


class InputError(ValueError):
    """Malformed input, with a pointer to the offending field."""

    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} line {exc.lineno} column {exc.colno}", exc.msg) from None
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from None


def _need(data, key, where):
    if not isinstance(data, dict) or key not in data:
        raise InputError(where, f"missing field '{key}'")
    return data[key]


def field_from_json(data, where="field") -> NumberField:
    if data is None:
        return QQ
    try:
        return NumberField(_need(data, "min_poly", where))
    except InputError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(where, str(exc)) from None


def _elem(field, data, where):
    try:
        return field.element_from_json(data)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(where, f"bad field element {data!r}: {exc}") from None


def series_to_json(s: TruncatedSeries) -> dict:
    return {
        "min_exp": s.start,
        "trunc": None if s.trunc == INF else s.trunc,
        "coeffs": {str(e): s.field.element_to_json(c) for e, c in s.terms().items()},
    }


def series_from_json(data, field=QQ, where="series", default_trunc=INF) -> TruncatedSeries:
    """``{"min_exp": k, "trunc": N, "coeffs": {"e": c}}``; a bare ``{"e": c}`` map is exact."""
    if not isinstance(data, dict):
        raise InputError(where, "series must be an object")
    if "coeffs" in data:
        coeffs = data["coeffs"]
        trunc = data.get("trunc", default_trunc)
        trunc = INF if trunc is None or trunc == "inf" else trunc
    else:
        coeffs, trunc = data, default_trunc
    terms = {}
    for e, c in coeffs.items():
        try:
            k = int(e)
        except ValueError:
            raise InputError(where, f"exponent {e!r} is not an integer") from None
        terms[k] = _elem(field, c, f"{where}.coeffs[{e}]")
    s = TruncatedSeries.from_dict(terms, field, trunc=trunc)
    if "min_exp" in data and "coeffs" in data and s.coeffs and s.start < data["min_exp"]:
        raise InputError(where, "a coefficient lies below min_exp")
    return s


def poly_to_json(f: Poly) -> list:
    return [{"coeff": f.field.element_to_json(c), "exps": list(e)} for e, c in sorted(f.terms.items())]


def poly_from_json(data, field=QQ, nvars=None, where="polynomial") -> Poly:
    if not isinstance(data, list):
        raise InputError(where, "polynomial must be a list of {coeff, exps}")
    terms = {}
    for k, t in enumerate(data):
        exps = tuple(_need(t, "exps", f"{where}[{k}]"))
        c = _elem(field, _need(t, "coeff", f"{where}[{k}]"), f"{where}[{k}].coeff")
        terms[exps] = terms.get(exps, field.zero) + c
    if not terms:
        raise InputError(where, "empty polynomial")
    try:
        return Poly(terms, nvars, field)
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


def _seed_from_json(data, field, where) -> BranchSeed:
    coords = _need(data, "coords", where)
    parsed = []
    for j, d in enumerate(coords):
        parsed.append({int(e): _elem(field, c, f"{where}.coords[{j}][{e}]") for e, c in d.items()})
    try:
        return BranchSeed(tuple(parsed), free=data.get("free", 1), field=field)
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


def curve_from_json(data, truncation: int | None = None) -> Curve:
    """Curve input.

    ``branches`` entries are coordinate maps (``{"x": series, "y": series}``
    or ``{"coords": [...]}``), seeds (``{"seed": {...}, "equation_index": i}``)
    or ``{"sqh_equation_index": i}``.  ``equations`` holds one polynomial per
    branch; otherwise they are only used for lifting and the curve is
    handled through its parametrization.
    """
    if not isinstance(data, dict):
        raise InputError("curve", "top level must be an object")
    if "catalog" in data:
        from . import catalog

        try:
            return catalog.get(data["catalog"])
        except KeyError:
            raise InputError("catalog", f"unknown curve {data['catalog']!r}") from None
    field = field_from_json(data.get("field"))
    N = truncation if truncation is not None else data.get("truncation", 64)
    eqs = [poly_from_json(e, field, where=f"equations[{k}]") for k, e in enumerate(data.get("equations", []))]
    branches = []
    for k, b in enumerate(_need(data, "branches", "curve")):
        where = f"branches[{k}]"
        try:
            if "seed" in b:
                i = b.get("equation_index", k if len(eqs) > k else 0)
                if i >= len(eqs):
                    raise InputError(where, f"equation_index {i} out of range")
                branches.append(hensel_lift_branch(eqs[i], _seed_from_json(b["seed"], field, where + ".seed"), N))
            elif "sqh_equation_index" in b:
                i = b["sqh_equation_index"]
                if i >= len(eqs):
                    raise InputError(where, f"sqh_equation_index {i} out of range")
                branches.append(sqh_parametrize(eqs[i], N))
            else:
                if "coords" in b:
                    raw = b["coords"]
                else:
                    raw = [b[n] for n in COORD_NAMES if n in b]
                coords = [series_from_json(s, field, f"{where}.{j}") for j, s in enumerate(raw)]
                branches.append(BranchParam(coords))
        except InputError:
            raise
        except ValueError as exc:
            raise InputError(where, str(exc)) from None
    per_branch = eqs if len(eqs) == len(branches) else None
    try:
        return Curve(branches, per_branch, name=data.get("name", ""))
    except ValueError as exc:
        raise InputError("curve", str(exc)) from None


def ideal_from_json(data, curve: Curve) -> FractionalIdeal:
    """``"O_D"`` (a preset name), ``{"preset": name}``, ``{"generators": [[series per branch], ...]}``
    or ``{"polynomials": [poly, ...]}`` (functions of the coordinates)."""
    if isinstance(data, str):
        data = {"preset": data}
    if not isinstance(data, dict):
        raise InputError("ideal", "must be a preset name or an object")
    if "preset" in data:
        if data["preset"] not in PRESETS:
            raise InputError("ideal.preset", f"unknown preset {data['preset']!r}; choose from {sorted(PRESETS)}")
        return FractionalIdeal.preset(curve, data["preset"])
    gens = []
    if "generators" in data:
        for k, g in enumerate(data["generators"]):
            comps = [series_from_json(s, curve.field, f"ideal.generators[{k}][{i}]") for i, s in enumerate(g)]
            gens.append(SeriesVector(comps))
    if "polynomials" in data:
        for k, g in enumerate(data["polynomials"]):
            f = poly_from_json(g, curve.field, curve.m, f"ideal.polynomials[{k}]")
            gens.append(SeriesVector([poly_eval_series(f, b.coords) for b in curve.branches]))
    if not gens:
        raise InputError("ideal", "no generators")
    try:
        return FractionalIdeal(curve, gens, name=data.get("name", "custom"))
    except ValueError as exc:
        raise InputError("ideal", str(exc)) from None


def plan_from_json(data, seed: int = 0):
    """Returns ``(family, points, seeds)`` for :func:`~curvevals.strata.scan_strata`.

    ``samples`` is a list of points, ``{"grid": [[values of s1], [values of s2], ...]}``
    or ``{"random": {"count": n, "support": [indices]}}``.  ``seeds`` is a list of
    ``{"point": [...], "field": ..., "branches": [seed, ...]}``.
    """
    from .strata import DeformationFamily, random_points

    fam = _need(data, "family", "plan")
    field = field_from_json(fam.get("field"), "plan.family.field")
    base = poly_from_json(_need(fam, "base", "plan.family"), field, 2, "plan.family.base")
    mons = [tuple(m) for m in fam.get("monomials", [])]
    try:
        F = DeformationFamily(base, tuple(mons), tuple(fam.get("names", ())), sqh=fam.get("sqh", True))
    except ValueError as exc:
        raise InputError("plan.family", str(exc)) from None
    samples = data.get("samples", [])
    if isinstance(samples, dict) and "grid" in samples:
        axes = [[QQ(x) for x in ax] for ax in samples["grid"]]
        points = [tuple(p) for p in itertools.product(*axes)]
    elif isinstance(samples, dict) and "random" in samples:
        r = samples["random"]
        points = [tuple(QQ(x) for x in pt) for pt in random_points(F.k, r.get("count", 1), seed, r.get("support"))]
    elif isinstance(samples, list):
        points = [tuple(QQ(x) for x in pt) for pt in samples]
    else:
        raise InputError("plan.samples", "expected a list, {grid} or {random}")
    for k, pt in enumerate(points):
        if len(pt) != F.k:
            raise InputError(f"plan.samples[{k}]", f"expected {F.k} coordinates")
    seeds = {}
    for k, s in enumerate(data.get("seeds", [])):
        where = f"plan.seeds[{k}]"
        sf = field_from_json(s.get("field"), where + ".field")
        pt = tuple(QQ(x) for x in _need(s, "point", where))
        seeds[pt] = [_seed_from_json(b, sf, f"{where}.branches[{j}]") for j, b in enumerate(_need(s, "branches", where))]
    return F, points, seeds


def value_to_json(v) -> list:
    return ["inf" if x == INF else int(x) for x in v]


def rational_list(xs) -> list:
    return [format_rational(x) for x in xs]

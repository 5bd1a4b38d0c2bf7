"""JSON forms for field elements, matrices, representations and results.

A field element is a list of ``[exponent, numerator, denominator]`` triples
with strictly increasing exponents below phi(n); ``[]`` is zero.  The
conductor is never stored per element: the enclosing object carries it.

Output is canonical (sorted keys, fixed indentation), so the same data always
serializes to the same bytes; digests are SHA-256 of the compact canonical
encoding.
"""
from __future__ import annotations

import hashlib
import json

from .cyclofield import Cyclotomic
from .cyclolinalg import CycMatrix
from .errors import ParseError, RealcycError
from .repcore import Representation


def _require(cond, msg):
    if not cond:
        raise ParseError(msg)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def cyclotomic_to_json(a: Cyclotomic) -> list:
    return a.terms()


def cyclotomic_from_json(n: int, obj) -> Cyclotomic:
    _require(isinstance(obj, list), f"field element must be a list, got {obj!r}")
    for t in obj:
        _require(
            isinstance(t, list) and len(t) == 3 and all(_is_int(v) for v in t),
            f"bad term {t!r}; expected [exponent, numerator, denominator]",
        )
        _require(t[1] != 0 and t[2] > 0, f"bad term {t!r}")
    try:
        return Cyclotomic.from_terms(n, obj)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(A: CycMatrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "entries": [[cyclotomic_to_json(x) for x in r] for r in A],
    }


def matrix_from_json(n: int, obj) -> CycMatrix:
    _require(isinstance(obj, dict), "matrix must be an object")
    r, c, entries = obj.get("rows"), obj.get("cols"), obj.get("entries")
    _require(_is_int(r) and _is_int(c) and r >= 0 and c >= 0, "bad matrix dimensions")
    _require(
        isinstance(entries, list)
        and len(entries) == r
        and all(isinstance(row, list) and len(row) == c for row in entries),
        f"matrix entries do not match {r}x{c}",
    )
    return CycMatrix(n, [[cyclotomic_from_json(n, x) for x in row] for row in entries])


def representation_to_json(rep: Representation, include_cap: bool = False) -> dict:
    out = {
        "conductor": rep.conductor,
        "degree": rep.degree,
        "generators": [matrix_to_json(g) for g in rep.generators],
    }
    if include_cap:
        out["closure_cap"] = rep.closure_cap
    return out


def representation_from_json(obj, closure_cap: int | None = None) -> Representation:
    _require(isinstance(obj, dict), "representation must be a JSON object")
    n, d, gens = obj.get("conductor"), obj.get("degree"), obj.get("generators")
    _require(_is_int(n) and n >= 1, "conductor must be a positive integer")
    _require(_is_int(d) and d >= 1, "degree must be a positive integer")
    _require(isinstance(gens, list), "generators must be a list")
    mats = [matrix_from_json(n, g) for g in gens]
    for g in mats:
        _require(g.shape == (d, d), f"generator shape {g.shape} does not match degree {d}")
    kwargs = {}
    cap = obj.get("closure_cap")
    if cap is not None:
        _require(_is_int(cap) and cap >= 1, "closure_cap must be a positive integer")
        kwargs["closure_cap"] = cap
    if closure_cap is not None:
        kwargs["closure_cap"] = closure_cap
    try:
        return Representation(n, d, mats, **kwargs)
    except RealcycError as exc:
        raise ParseError(str(exc)) from None


def _approx_matrix(A: CycMatrix, digits: int = 12) -> list:
    def fmt(x: Cyclotomic):
        z = x.approx()
        if x.is_real():
            return f"{z.real:.{digits}g}"
        return f"{z.real:.{digits}g}{z.imag:+.{digits}g}j"

    return [[fmt(x) for x in r] for r in A]


def result_to_json(result, rep: Representation, approx: bool = False) -> dict:
    diag = result.diagnostics
    out = {
        "conductor": rep.conductor,
        "degree": rep.degree,
        "Q": matrix_to_json(result.Q),
        "generators_real": [matrix_to_json(g) for g in result.conjugated_generators],
        "diagnostics": {
            "nu2": diag.nu2,
            "mu": None if diag.mu is None else cyclotomic_to_json(diag.mu),
            "xi": None if diag.xi is None else cyclotomic_to_json(diag.xi),
            "xi_attempts": diag.xi_attempts,
            "norm_strategy": diag.norm_strategy,
            "group_order": diag.group_order,
            "sums_over": "matrix image of the group",
        },
    }
    if approx:
        # decimal rendering for people, double precision; exact data is above
        out["approx"] = {
            "Q": _approx_matrix(result.Q),
            "generators_real": [_approx_matrix(g) for g in result.conjugated_generators],
        }
    return out


def result_from_json(obj) -> tuple[int, CycMatrix, list[CycMatrix]]:
    """(conductor, Q, real generators) from a result document."""
    _require(isinstance(obj, dict), "result must be a JSON object")
    n = obj.get("conductor")
    _require(_is_int(n) and n >= 1, "result lacks a positive integer conductor")
    _require("Q" in obj and isinstance(obj.get("generators_real"), list), "result lacks Q or generators_real")
    Q = matrix_from_json(n, obj["Q"])
    gens = [matrix_from_json(n, g) for g in obj["generators_real"]]
    return n, Q, gens


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


def load_json(path) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None

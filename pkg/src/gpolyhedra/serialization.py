"""JSON file formats for polyhedra, cones, LP reports and VLP problems.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral).  On
input, JSON integers and such strings are accepted; JSON floats are refused.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import InputError
from .generalized import ConeForm, Decomposition
from .linprog import LPReport
from .polyhedron import GeneratorForm, HForm
from .rational_linalg import format_rat, to_rat
from .vector_linprog import VLPProblem, WeakEffSet

H_KEYS = {"dim", "eq", "ineq"}
V_KEYS = {"dim", "points", "rays", "lineality"}


def parse_rat(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{where}: floats are not accepted, write \"p/q\"")
    try:
        return to_rat(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def parse_vector(value, where: str, dim: int | None = None) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of rationals")
    out = tuple(parse_rat(x, f"{where}[{i}]") for i, x in enumerate(value))
    if dim is not None and len(out) != dim:
        raise InputError(f"{where}: expected {dim} entries, got {len(out)}")
    return out


def parse_matrix(value, where: str, ncols: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of rows")
    return tuple(parse_vector(row, f"{where}[{i}]", ncols) for i, row in enumerate(value))


def _check_keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    extra = sorted(set(obj) - allowed)
    if extra:
        raise InputError(f"{where}: unknown field {extra[0]!r}")


def _dim(obj, where) -> int:
    if "dim" not in obj:
        raise InputError(f"{where}: missing field 'dim'")
    d = obj["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InputError(f"{where}.dim: expected a positive integer")
    return d


def is_vform(obj) -> bool:
    return isinstance(obj, dict) and bool(set(obj) & {"points", "rays", "lineality"})


def hform_from_json(obj, where: str = "H-form") -> HForm:
    _check_keys(obj, H_KEYS, where)
    n = _dim(obj, where)
    eq = obj.get("eq", {"A": [], "y": []})
    ineq = obj.get("ineq", {"C": [], "alpha": []})
    _check_keys(eq, {"A", "y"}, f"{where}.eq")
    _check_keys(ineq, {"C", "alpha"}, f"{where}.ineq")
    A = parse_matrix(eq.get("A", []), f"{where}.eq.A", n)
    y = parse_vector(eq.get("y", []), f"{where}.eq.y", len(A))
    C = parse_matrix(ineq.get("C", []), f"{where}.ineq.C", n)
    alpha = parse_vector(ineq.get("alpha", []), f"{where}.ineq.alpha", len(C))
    return HForm(n, A, y, C, alpha)


def vform_from_json(obj, where: str = "V-form") -> GeneratorForm:
    _check_keys(obj, V_KEYS, where)
    n = _dim(obj, where)
    parts = {k: parse_matrix(obj.get(k, []), f"{where}.{k}", n) for k in ("points", "rays", "lineality")}
    try:
        return GeneratorForm(n, **parts)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from exc


def polyhedron_from_json(obj, where: str = "input") -> HForm | GeneratorForm:
    return vform_from_json(obj, where) if is_vform(obj) else hform_from_json(obj, where)


def vlp_from_json(obj, where: str = "VLP") -> VLPProblem:
    _check_keys(obj, {"M", "D", "K"}, where)
    for key in ("M", "D", "K"):
        if key not in obj:
            raise InputError(f"{where}: missing field {key!r}")
    M = parse_matrix(obj["M"], f"{where}.M")
    if not M or not M[0]:
        raise InputError(f"{where}.M: must be a nonempty matrix")
    if any(len(r) != len(M[0]) for r in M):
        raise InputError(f"{where}.M: rows have unequal length")
    D = polyhedron_from_json(obj["D"], f"{where}.D")
    K_obj = obj["K"]
    K = vform_from_json(K_obj, f"{where}.K") if is_vform(K_obj) else hform_from_json(K_obj, f"{where}.K")
    if D.dim != len(M[0]):
        raise InputError(f"{where}.D: dimension {D.dim} does not match M's {len(M[0])} columns")
    if K.dim != len(M):
        raise InputError(f"{where}.K: dimension {K.dim} does not match M's {len(M)} rows")
    if isinstance(K, GeneratorForm):
        K = ConeForm(K.dim, K.rays + tuple(p for p in K.points if any(p)), K.lineality)
    return VLPProblem(M, D, K)


# -- output ------------------------------------------------------------------

def vector_json(v) -> list[str]:
    return [format_rat(x) for x in v]


def _rows_json(rows, sort: bool = True):
    rows = sorted(rows) if sort else list(rows)
    return [vector_json(r) for r in rows]


def vform_json(g: GeneratorForm, sort: bool = True) -> dict[str, Any]:
    return {
        "dim": g.dim,
        "points": _rows_json(g.points, sort),
        "rays": _rows_json(g.rays, sort),
        "lineality": _rows_json(g.lineality, sort),
    }


def hform_json(h: HForm) -> dict[str, Any]:
    eq = sorted(zip(h.A, h.y))
    ineq = sorted(zip(h.C, h.alpha))
    return {
        "dim": h.dim,
        "eq": {"A": [vector_json(r) for r, _ in eq], "y": [format_rat(b) for _, b in eq]},
        "ineq": {"C": [vector_json(r) for r, _ in ineq], "alpha": [format_rat(b) for _, b in ineq]},
    }


def cone_json(c: ConeForm) -> dict[str, Any]:
    return vform_json(c.as_generator_form())


def decomposition_json(d: Decomposition) -> dict[str, Any]:
    return {"x0": _rows_json(d.x0_basis, False), "x1": _rows_json(d.x1_basis, False), "d1": vform_json(d.d1)}


def lp_report_json(r: LPReport) -> dict[str, Any]:
    return {
        "solvable": r.solvable,
        "value": None if r.optimal_value is None else format_rat(r.optimal_value),
        "witness": None if r.witness is None else vector_json(r.witness),
        "unbounded_direction": None if r.unbounded_direction is None else vector_json(r.unbounded_direction),
    }


def weak_set_json(w: WeakEffSet) -> dict[str, Any]:
    return {
        "covers_all_of_D": w.covers_all_of_D,
        "pieces": [
            {
                "I": sorted(p.pattern.I),
                "J": sorted(p.pattern.J),
                "x_star": vector_json(p.x_star),
                "y_star": vector_json(p.y_star),
                "set": vform_json(p.piece, sort=False),
            }
            for p in w.pieces
        ],
    }


def dumps(obj, indent: int = 0) -> str:
    """JSON with one-line scalar lists, otherwise indented by two spaces."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in obj) + "\n" + end + "]"
    return json.dumps(obj, ensure_ascii=False)

"""Command-line front end.

Exit status: 0 on success, 1 when the request is mathematically invalid
(empty set where a point is needed, unsolvable objective, dependent
weights, empty interior of K), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialization as ser
from .errors import DomainError, EmptySetError, InputError
from .function_space import RatPoly, run_demo
from .generalized import ConeForm, cone_representation, decompose, dual_cone
from .linprog import LPProblem, solution_set, solvable_cone, solve, strict_feasibility
from .polyhedron import GeneratorForm, HForm, contains_h, contains_v, h_to_v, recession_cone, v_to_h
from .rational_linalg import format_rat
from .vector_linprog import (
    criterion_sufficient,
    is_weakly_efficient_oracle,
    vlp_has_solution,
    weakly_efficient_set,
)

VERBS = (
    "convert", "membership", "decompose", "recession", "cone-rep", "dual-cone",
    "lp-solve", "lp-cone", "lp-solution-set",
    "vlp-exists", "vlp-weak-set", "vlp-oracle", "demo-cab",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load_json(path: str, flag: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{flag}: cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag}: invalid JSON in {path}: {exc.msg} (line {exc.lineno})") from exc


def _inline_vector(text: str, flag: str, dim: int):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag}: expected a JSON array, {exc.msg}") from exc
    return ser.parse_vector(obj, flag, dim)


def _inline_int_list(text: str, flag: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag}: expected a JSON array, {exc.msg}") from exc
    if not isinstance(obj, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in obj):
        raise InputError(f"{flag}: expected a list of integer row indices")
    return obj


def _poly(text: str, flag: str) -> RatPoly:
    try:
        return RatPoly(tuple(ser.parse_rat(c.strip(), flag) for c in text.split(",")))
    except InputError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise InputError(f"{flag}: {exc}") from exc


def _as_vform(obj: HForm | GeneratorForm) -> GeneratorForm:
    return h_to_v(obj) if isinstance(obj, HForm) else obj


def _as_hform(obj: HForm | GeneratorForm) -> HForm:
    return obj if isinstance(obj, HForm) else v_to_h(obj)


def _as_cone(obj: HForm | GeneratorForm) -> ConeForm:
    if isinstance(obj, HForm):
        return cone_representation(obj)
    return ConeForm(obj.dim, obj.rays + tuple(p for p in obj.points if any(p)), obj.lineality)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpoly", description="Exact computations with generalized polyhedra.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(verb, help_text, *flags):
        p = sub.add_parser(verb, help=help_text, description=help_text)
        for flag in flags:
            if flag == "--in":
                p.add_argument("--in", dest="input", required=True, help="input JSON file")
            elif flag == "--set":
                p.add_argument("--set", required=True, help="feasible set file (H- or V-form)")
            elif flag == "--objective":
                p.add_argument("--objective", required=True, help='objective as JSON array, e.g. "[1,-1/2]"')
            else:
                p.add_argument(flag, required=True)
        p.add_argument("--out", help="write the result here instead of stdout")
        return p

    p = add("convert", "Convert between halfspace (h) and generator (v) form.", "--in")
    p.add_argument("--to", choices=("h", "v"), required=True)
    p = add("membership", "Test a point; with --strict-rows and no --point, find a strictly feasible point.", "--in")
    p.add_argument("--point")
    p.add_argument("--strict-rows", dest="strict_rows")
    add("decompose", "Split an H-form set into D1 + X0.", "--in")
    add("recession", "Recession cone of a set.", "--in")
    add("cone-rep", "Rays and lineality of a homogeneous H-form cone.", "--in")
    add("dual-cone", "Dual cone (H-form cone or V-form rays/lineality).", "--in")
    add("lp-solve", "Minimise a linear objective over a set.", "--set", "--objective")
    add("lp-cone", "Cone of objectives for which the LP is solvable.", "--set")
    add("lp-solution-set", "Optimal face of the LP as a generator form.", "--set", "--objective")
    add("vlp-exists", "Existence test for a vector LP.", "--in")
    add("vlp-weak-set", "Weakly efficient set of a vector LP.", "--in")
    add("vlp-oracle", "Direct weak-efficiency test of a feasible point.", "--in", "--point")
    p = add("demo-cab", "Two integral constraints on polynomials over [a, b].")
    for flag in ("--omega1", "--omega2", "--a", "--b", "--alpha1", "--alpha2"):
        p.add_argument(flag, required=True)
    return parser


def _execute(args) -> str:
    verb = args.verb
    if verb == "demo-cab":
        return _demo(args)
    if verb in ("lp-solve", "lp-cone", "lp-solution-set"):
        d = _as_vform(ser.polyhedron_from_json(_load_json(args.set, "--set"), "--set"))
        if verb == "lp-cone":
            if d.is_empty:
                raise EmptySetError("feasible set is empty")
            return ser.dumps(ser.cone_json(solvable_cone(d)))
        x_star = _inline_vector(args.objective, "--objective", d.dim)
        if verb == "lp-solve":
            return ser.dumps(ser.lp_report_json(solve(LPProblem(x_star, d))))
        return ser.dumps(ser.vform_json(solution_set(d, x_star)))

    obj = _load_json(args.input, "--in")
    if verb.startswith("vlp-"):
        p = ser.vlp_from_json(obj, "--in")
        if verb == "vlp-exists":
            w = vlp_has_solution(p)
            return ser.dumps({
                "exists": w is not None,
                "y_star": None if w is None else ser.vector_json(w[0]),
                "x_star": None if w is None else ser.vector_json(w[1]),
                "sufficient_criterion": criterion_sufficient(p),
            })
        if verb == "vlp-weak-set":
            return ser.dumps(ser.weak_set_json(weakly_efficient_set(p)))
        u = _inline_vector(args.point, "--point", p.D.dim)
        return ser.dumps({"weakly_efficient": is_weakly_efficient_oracle(p, u)})

    s = ser.polyhedron_from_json(obj, "--in")
    if verb == "convert":
        if args.to == "v":
            return ser.dumps(ser.vform_json(_as_vform(s)))
        return ser.dumps(ser.hform_json(_as_hform(s)))
    if verb == "membership":
        if args.point is None:
            if args.strict_rows is None or not isinstance(s, HForm):
                raise InputError("--point is required (or --strict-rows with an H-form)")
            x = strict_feasibility(s, _inline_int_list(args.strict_rows, "--strict-rows"))
            return ser.dumps({"point": None if x is None else ser.vector_json(x)})
        x = _inline_vector(args.point, "--point", s.dim)
        if isinstance(s, HForm):
            return ser.dumps({"member": contains_h(s, x)})
        cert = contains_v(s, x)
        return ser.dumps({
            "member": cert is not None,
            "certificate": None if cert is None else {
                "lambda": ser.vector_json(cert.coefficients),
                "mu": ser.vector_json(cert.ray_coefficients),
                "lineality": ser.vector_json(cert.lineality_coefficients),
            },
        })
    if verb == "decompose":
        if not isinstance(s, HForm):
            raise InputError("--in: decompose expects an H-form")
        return ser.dumps(ser.decomposition_json(decompose(s)))
    if verb == "recession":
        return ser.dumps(ser.vform_json(recession_cone(_as_vform(s))))
    if verb == "cone-rep":
        if not isinstance(s, HForm):
            raise InputError("--in: cone-rep expects an H-form")
        return ser.dumps(ser.cone_json(cone_representation(s)))
    if verb == "dual-cone":
        return ser.dumps(ser.cone_json(dual_cone(_as_cone(s))))
    raise InputError(f"unknown verb {verb!r}")  # pragma: no cover


def _demo(args) -> str:
    w1 = _poly(args.omega1, "--omega1")
    w2 = _poly(args.omega2, "--omega2")
    a = ser.parse_rat(args.a, "--a")
    b = ser.parse_rat(args.b, "--b")
    al1 = ser.parse_rat(args.alpha1, "--alpha1")
    al2 = ser.parse_rat(args.alpha2, "--alpha2")
    if a >= b:
        raise InputError("--a/--b: need a < b")
    if w1.is_zero() or w2.is_zero():
        raise InputError("--omega1/--omega2: weights must be nonzero")
    r = run_demo(w1, w2, a, b, al1, al2)
    f = format_rat
    poly = lambda p: [f(c) for c in p.coefficients]  # noqa: E731
    text = [
        f"gram      = [[{f(r.gram[0][0])}, {f(r.gram[0][1])}], [{f(r.gram[1][0])}, {f(r.gram[1][1])}]]",
        f"delta     = {f(r.delta)}",
        f"eta       = ({f(r.eta[0])}, {f(r.eta[1])})",
        f"u         = {r.u}",
        f"v1        = {r.v1}",
        f"v2        = {r.v2}",
        f"identities: {'ok' if r.identities_ok else 'FAILED'}",
    ]
    payload = {
        "gram": [[f(x) for x in row] for row in r.gram],
        "delta": f(r.delta),
        "eta": [f(x) for x in r.eta],
        "u": poly(r.u),
        "v1": poly(r.v1),
        "v2": poly(r.v2),
        "identities_ok": r.identities_ok,
    }
    return "\n".join(text) + "\n" + ser.dumps(payload)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = _execute(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if getattr(args, "out", None):
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    else:
        stdout.write(out + "\n")
    return 0


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()

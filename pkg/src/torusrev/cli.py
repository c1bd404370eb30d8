"""Command line interface.

Exit codes: 0 success, 2 usage or parse error, 3 domain precondition
violation (not hyperbolic, not an involution, ...).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from enum import Enum
from fractions import Fraction

from . import tables
from .errors import InvalidParams, NoRecipe, TorusRevError
from .involutions import (
    Family,
    InvolutionSpec,
    enumerate_involutions,
    fixed_point_curves,
    materialize,
)
from .lattice import Mat2Z, classify_hyperbolicity, det, is_involution
from .pell import PellProblem, brute_force_solutions, solve_general
from .reversibility import (
    DEFAULT_DEPTH,
    analyze,
    construct_reversible_anosov,
    is_r_reversible,
)

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3


class DomainError(Exception):
    pass


def to_jsonable(obj):
    """Plain JSON types; integers stay integers, fractions become 'p/q' strings."""
    if isinstance(obj, Mat2Z):
        return obj.rows()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    return obj


def envelope(command, input_echo, result, warnings=()):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_echo": to_jsonable(input_echo),
        "result": to_jsonable(result),
        "warnings": list(warnings),
    }


def dumps(env) -> str:
    return json.dumps(env, indent=2, sort_keys=True)


# --- payload builders ------------------------------------------------------


def _solution_set_payload(sol_set, y_max=None):
    out = {
        "equation": sol_set.problem.equation(),
        "D": sol_set.problem.D,
        "N": sol_set.problem.N,
        "kind": sol_set.kind.value,
        "count": sol_set.count(),
        "solutions": [list(s) for s in sol_set.solutions],
        "representatives": [list(s) for s in sol_set.representatives],
        "automorph": list(sol_set.automorph) if sol_set.automorph else None,
        "lines": [{"slope": m, "intercept": k} for m, k in sol_set.lines],
        "search_bound": sol_set.search_bound,
    }
    if y_max is not None:
        oracle = brute_force_solutions(sol_set.problem, y_max)
        expanded = sol_set.iter_up_to(y_max)
        out["oracle"] = {
            "y_max": y_max,
            "brute_force": [list(s) for s in oracle],
            "expanded": [list(s) for s in expanded],
            "agree": sorted(oracle) == sorted(expanded),
        }
    return out


def _report_payload(rep):
    out = {
        "input": rep.input,
        "orientation": rep.orientation,
        "hyperbolicity": classify_hyperbolicity(rep.input),
        "verdict_trivial": rep.verdict_trivial,
        "conic": rep.conic,
        "reversors_found": rep.reversors_found,
        "reversor_count": len(rep.reversors_found),
    }
    for name in ("case1", "case2"):
        case = getattr(rep, name)
        out[name] = None if case is None else {
            "applicable": case.applicable,
            "divisible": case.divisible,
            "reason": case.reason,
            "reversors": [
                {"family": r.family, "gamma": r.gamma, "matrix": r.matrix} for r in case.reversors
            ],
        }
    c3 = rep.case3
    if c3 is not None:
        reasons = {}
        for r in c3.rejected:
            reasons[r.code] = reasons.get(r.code, 0) + 1
        out["case3"] = {
            "status": c3.status,
            "depth": c3.depth,
            "pell": _solution_set_payload(c3.solutions),
            "admissible": [
                {"alpha": g.alpha, "beta": g.beta, "x": g.x, "y": g.y, "matrix": g.matrix}
                for g in c3.admissible
            ],
            "rejected_count": len(c3.rejected),
            "rejected_by_reason": reasons,
        }
    if rep.obstruction is not None:
        out["obstruction"] = {
            "valid": rep.obstruction.valid,
            "steps": rep.obstruction.steps,
        }
    return out


# --- commands ----------------------------------------------------------------


def cmd_analyze(args):
    L = Mat2Z(*args.matrix)
    v = classify_hyperbolicity(L)
    if not v.is_hyperbolic:
        raise DomainError(f"{L} is not hyperbolic: {v.describe()}")
    rep = analyze(L, args.depth)
    return envelope(
        "analyze",
        {"matrix": L, "depth": args.depth},
        _report_payload(rep),
        rep.warnings,
    )


def cmd_pell(args):
    problem = PellProblem(args.D, args.N)
    sol_set = solve_general(problem)
    warnings = []
    if sol_set.is_infinite:
        warnings.append("infinite solution set shown as representatives/lines, not unrolled")
    return envelope(
        "pell",
        {"D": args.D, "N": args.N, "ymax": args.ymax},
        _solution_set_payload(sol_set, args.ymax),
        warnings,
    )


_FAMILY_ALIASES = {f.value: f for f in Family}


def _parse_spec(family: str, params) -> InvolutionSpec:
    fam = _FAMILY_ALIASES.get(family.lower())
    if fam is None:
        raise InvalidParams(f"unknown family {family!r}; choose from {sorted(_FAMILY_ALIASES)}")
    if fam is Family.GENERAL:
        if len(params) != 2:
            raise InvalidParams("general family takes two parameters: alpha beta")
        spec = InvolutionSpec.general(*params)
    else:
        if len(params) != 1:
            raise InvalidParams(f"{fam.value} takes one parameter: gamma")
        spec = InvolutionSpec.triangular(fam, params[0])
    materialize(spec)
    return spec


def cmd_construct(args):
    spec = _parse_spec(args.family, args.params)
    L = construct_reversible_anosov(spec, args.choice)
    A = materialize(spec)
    v = classify_hyperbolicity(L)
    verification = {
        "involution": A,
        "is_involution": is_involution(A),
        "is_r_reversible": is_r_reversible(L, A),
        "det": det(L),
        "is_hyperbolic": v.is_hyperbolic,
        "hyperbolicity": v.describe(),
    }
    return envelope(
        "construct",
        {"family": spec.family, "params": list(spec.params), "choice": args.choice},
        {"L": L, "verification": verification},
    )


def cmd_fixset(args):
    A = Mat2Z(*args.matrix)
    curves = fixed_point_curves(A)
    return envelope(
        "fixset",
        {"matrix": A},
        {
            "count": len(curves),
            "curves": [
                {"direction": list(c.direction), "offset": list(c.offset), "description": c.describe()}
                for c in curves
            ],
        },
    )


def cmd_table(args):
    if args.which == "example1":
        rows = tables.example1(args.depth)
        payload = [
            {
                "L": r.L,
                "gammas": list(r.gammas),
                "expected_gammas": list(r.expected_gammas),
                "general_instance": r.expected_instance,
                "general_instance_found": r.instance_found,
                "general_reversors_within_depth": r.general_count,
                "equation": r.equation,
                "expected_equation": r.expected_equation,
                "pell_kind": r.pell_kind,
                "pell_verified": r.pell_verified,
                "status": "MATCH" if r.match else "MISMATCH",
            }
            for r in rows
        ]
    else:
        rows = tables.example2(args.depth)
        payload = [
            {
                "L": r.L,
                "delta": r.delta,
                "expected_delta": r.expected_delta,
                "equation": r.equation,
                "expected_equation": r.expected_equation,
                "solutions": r.count,
                "expected_solutions": r.expected_count,
                "conic": r.conic,
                "expected_conic": r.expected_conic,
                "reversors": r.reversors_total,
                "obstruction_valid": r.obstruction_valid,
                "status": "MATCH" if r.match else "MISMATCH",
            }
            for r in rows
        ]
    overall = "MATCH" if all(r.match for r in rows) else "MISMATCH"
    return envelope(
        "table",
        {"which": args.which, "depth": args.depth},
        {"rows": payload, "status": overall},
        [f"case-3 enumeration bounded at depth {args.depth}"],
    )


def cmd_enumerate(args):
    mats = enumerate_involutions(args.bound)
    return envelope("enumerate", {"bound": args.bound}, {"count": len(mats), "involutions": mats})


# --- human rendering -------------------------------------------------------


def _fmt(m):
    (a, b), (c, d) = m
    return f"[[{a}, {b}], [{c}, {d}]]"


def render_text(env) -> str:
    cmd, res = env["command"], env["result"]
    lines = []
    if cmd == "analyze":
        lines.append(f"L = {_fmt(res['input'])}  ({res['orientation']}, {res['hyperbolicity']['reason']})")
        for name in ("case1", "case2"):
            case = res.get(name)
            if case:
                gs = ", ".join(f"{r['family']} gamma={r['gamma']}" for r in case["reversors"]) or "-"
                lines.append(f"{name}: {case['reason']}; {gs}")
        c3 = res.get("case3")
        if c3:
            p = c3["pell"]
            lines.append(f"case3: {p['equation']} ({p['kind']}), {len(c3['admissible'])} admissible, "
                         f"{c3['rejected_count']} rejected [{c3['status']}, depth {c3['depth']}]")
            for g in c3["admissible"][:10]:
                lines.append(f"  alpha={g['alpha']} beta={g['beta']} -> {_fmt(g['matrix'])}")
            if len(c3["admissible"]) > 10:
                lines.append(f"  ... {len(c3['admissible']) - 10} more")
        if "obstruction" in res:
            lines.append(f"obstruction proof valid: {res['obstruction']['valid']}")
            for s in res["obstruction"]["steps"]:
                lines.append(f"  [{'ok' if s['verified'] else 'FAIL'}] {s['label']}: {s['claim']}")
        lines.append(f"reversors found: {res['reversor_count']}")
    elif cmd == "pell":
        lines.append(f"{res['equation']}: {res['kind']} (count {res['count']})")
        if res["automorph"]:
            lines.append(f"automorph: {tuple(res['automorph'])}")
        if res["representatives"]:
            lines.append("class representatives: " + ", ".join(str(tuple(s)) for s in res["representatives"]))
        if res["lines"]:
            lines.append("lines: " + ", ".join(f"x = {ln['slope']}*y + {ln['intercept']}" for ln in res["lines"]))
        if res["solutions"]:
            lines.append("solutions: " + ", ".join(str(tuple(s)) for s in res["solutions"]))
        if "oracle" in res:
            lines.append(f"brute force |y| <= {res['oracle']['y_max']}: agree = {res['oracle']['agree']}")
    elif cmd == "construct":
        v = res["verification"]
        lines.append(f"L = {_fmt(res['L'])}")
        lines.append(f"A = {_fmt(v['involution'])}")
        lines.append(f"involution: {v['is_involution']}, reversible: {v['is_r_reversible']}, "
                     f"det: {v['det']}, hyperbolic: {v['is_hyperbolic']}")
    elif cmd == "fixset":
        lines.append(f"{res['count']} closed curve(s)")
        for c in res["curves"]:
            lines.append(f"  {c['description']}")
    elif cmd == "table":
        for r in res["rows"]:
            lines.append(f"{_fmt(r['L'])}: {r['status']}")
            for k, v in r.items():
                if k not in ("L", "status"):
                    lines.append(f"    {k}: {v}")
        lines.append(f"overall: {res['status']}")
    elif cmd == "enumerate":
        lines.append(f"{res['count']} involutions")
        lines.extend(_fmt(m) for m in res["involutions"])
    for w in env["warnings"]:
        lines.append(f"note: {w}")
    return "\n".join(lines)


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="torusrev", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="find linear reversors of L = [[a, b], [c, d]]")
    a.add_argument("matrix", type=int, nargs=4, metavar="N")
    a.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    a.set_defaults(func=cmd_analyze)

    q = sub.add_parser("pell", parents=[common], help="solve x^2 - D y^2 = N")
    q.add_argument("D", type=int)
    q.add_argument("N", type=int)
    q.add_argument("--ymax", type=int, default=None)
    q.set_defaults(func=cmd_pell)

    c = sub.add_parser("construct", parents=[common], help="reversible Anosov map for an involution")
    c.add_argument("family", help="lower+, lower-, upper+, upper- or general")
    c.add_argument("params", type=int, nargs="+")
    c.add_argument("--choice", type=int, default=0)
    c.set_defaults(func=cmd_construct)

    f = sub.add_parser("fixset", parents=[common], help="fixed curves of an involution on the torus")
    f.add_argument("matrix", type=int, nargs=4, metavar="N")
    f.set_defaults(func=cmd_fixset)

    t = sub.add_parser("table", parents=[common], help="regenerate a reference table")
    t.add_argument("which", choices=["example1", "example2"])
    t.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("enumerate", parents=[common], help="list involutions with bounded entries")
    e.add_argument("--bound", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    for name in ("depth", "bound", "ymax"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            print(f"error: --{name} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    try:
        env = args.func(args)
    except (InvalidParams, NoRecipe) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, TorusRevError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(dumps(env) if args.json else render_text(env))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

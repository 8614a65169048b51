"""Command-line entry point: every operation takes exact decimal arguments and prints a JSON report."""
from __future__ import annotations

import argparse
import json
import platform
import sys
from fractions import Fraction

from . import __version__
from ._accel import BACKEND
from .errors import DiophkitError

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(s: str) -> Fraction:
    try:
        return Fraction(s.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {s!r}") from exc


def _int(s: str) -> int:
    r = _rat(s)
    if r.denominator != 1:
        raise UsageError(f"not an integer: {s!r}")
    return r.numerator


def _rat_list(s: str) -> list[Fraction]:
    return [_rat(t) for t in s.split(",") if t.strip()]


def _int_list(s: str) -> list[int]:
    return [_int(t) for t in s.split(",") if t.strip()]


def _poly(s: str):
    from .exact_arith.poly import Poly

    return Poly(_rat_list(s))


def _budgets(pairs) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise UsageError(f"budget must look like name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = _int(v)
    return out


# -- commands ----------------------------------------------------------------------------


def cmd_cyclo_analyze(a):
    from .cyclotomic import analyze

    return True, analyze(_int(a.p), _int(a.m)), {}


def cmd_ext_find(a):
    from .extension_factory import find_inert_modulus, find_split_modulus, residue_certificate

    primes, t = _int_list(a.primes), _int(a.degree)
    avoid = _int_list(a.avoid) if a.avoid else []
    finder = find_inert_modulus if a.mode == "inert" else find_split_modulus
    ell = finder(primes, t, avoid)
    return True, {"ell": ell, "mode": a.mode, "certificate": residue_certificate(primes, ell, t)}, {}


def cmd_rank_check(a):
    from .rank_bounds.ranks import check_rank_inequality

    rep = check_rank_inequality(_int(a.r), _int(a.s), _int(a.p2))
    return rep.passed, rep.to_json(), {}


def _field(s):
    from .number_field.field import NumberField

    return NumberField(_poly(s))


def cmd_bounds_escape(a):
    from .rank_bounds.lemmas import escape_index

    K = _field(a.field)
    x = K.element(_rat_list(a.x))
    k = escape_index(x, _poly(a.P), _int(a.p2), _int(a.n), _int(a.l), _int(a.NE))
    return True, {"k": k}, {}


def cmd_bounds_threshold(a):
    from .exact_arith.integers import rat_to_str
    from .rank_bounds.lemmas import threshold_A

    Q = _poly(a.Q)
    A = threshold_A(Q, _rat(a.k))
    return True, {"A": rat_to_str(A), "B": rat_to_str(threshold_A(Q, 2) + 1)}, {}


def cmd_bounds_boundtwo(a):
    from .rank_bounds.lemmas import bound_two_check

    K = _field(a.field)
    cert = bound_two_check(K, K.element(_rat_list(a.x)), K.element(_rat_list(a.z)))
    return cert.holds, cert.to_json(), {}


def cmd_witness_params(a):
    from .witness_kit import build_params

    P = build_params(_int(a.q), _int(a.b), _int(a.prime))
    prov = {"s": "least admissible", "g": "p^s / m with m the least positive CRT solution prime to p", "z": "default"}
    return True, P.to_json(), prov


def cmd_witness_check(a):
    from .witness_kit import build_params, h_valuation_profile, necessity_check

    P = build_params(_int(a.q), _int(a.b), _int(a.prime))
    ordx = _int(a.ordx)
    prof = h_valuation_profile(P, ordx)
    return True, {"profile": prof.to_json(), "verdict": necessity_check(P, ordx), "params": P.to_json()}, {}


def cmd_rewrite(a):
    from .rewrite.compiler import BasisSpec, coordinatize, coordinatize_system
    from .rewrite.system import PolySystem

    with open(a.input, encoding="utf-8") as fh:
        system = PolySystem.from_dict(json.load(fh))
    spec = BasisSpec(tuple(_rat_list(a.min_poly)), a.generator)
    fn = coordinatize if len(system.equations) == 1 else coordinatize_system
    out = fn(system, spec, a.mode)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(out.to_json())
    return True, {"equations": len(out.equations), "variables": len(out.variables), "system": out.to_dict()}, {}


def cmd_assemble(a):
    from .assembler import ASSEMBLERS, SystemParams, emitted_labels, expected_labels, toy_params

    if a.params:
        with open(a.params, encoding="utf-8") as fh:
            params = SystemParams.from_dict(json.load(fh))
    else:
        params = toy_params()
    system = ASSEMBLERS[a.system](params)
    system.validate()
    text = system.to_json()
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    labels_ok = emitted_labels(system) == expected_labels(a.system, params)
    result = {"system": a.system, "equations": len(system.equations), "opaque": len(system.opaque),
              "labels_match": labels_ok, "out": a.out}
    if not a.out:
        result["serialized"] = json.loads(text)
    return labels_ok, result, dict(params.provenance)


def cmd_verify_suite(a):
    from .suites import run_suite

    rep = run_suite(a.name, _budgets(a.budget), a.seed)
    return rep["passed"], rep, {}


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diophkit", description=__doc__)
    p.add_argument("--seed", type=int, default=20240601)
    p.add_argument("--output", "-o", default="-", help="report path, '-' for stdout")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    cy = sub.add_parser("cyclo").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = cy.add_parser("analyze")
    c.add_argument("--p", required=True)
    c.add_argument("--m", required=True)
    c.set_defaults(fn=cmd_cyclo_analyze)

    ex = sub.add_parser("ext").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = ex.add_parser("find")
    c.add_argument("--mode", choices=["inert", "split"], required=True)
    c.add_argument("--primes", required=True, help="comma-separated primes")
    c.add_argument("--degree", required=True)
    c.add_argument("--avoid", default="")
    c.set_defaults(fn=cmd_ext_find)

    rk = sub.add_parser("rank").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = rk.add_parser("check")
    c.add_argument("--r", required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--p2", required=True)
    c.set_defaults(fn=cmd_rank_check)

    bd = sub.add_parser("bounds").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = bd.add_parser("escape", help="polynomials are ascending coefficient lists")
    c.add_argument("--field", required=True)
    c.add_argument("--x", required=True)
    c.add_argument("--P", required=True)
    c.add_argument("--p2", required=True)
    c.add_argument("--n", required=True)
    c.add_argument("--l", required=True)
    c.add_argument("--NE", default="1")
    c.set_defaults(fn=cmd_bounds_escape)
    c = bd.add_parser("threshold")
    c.add_argument("--Q", required=True)
    c.add_argument("--k", default="2")
    c.set_defaults(fn=cmd_bounds_threshold)
    c = bd.add_parser("boundtwo")
    c.add_argument("--field", required=True)
    c.add_argument("--x", required=True)
    c.add_argument("--z", required=True)
    c.set_defaults(fn=cmd_bounds_boundtwo)

    wi = sub.add_parser("witness").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, fn in (("params", cmd_witness_params), ("check", cmd_witness_check)):
        c = wi.add_parser(name)
        c.add_argument("--q", default="3")
        c.add_argument("--b", default="2")
        c.add_argument("--prime", default="7")
        if name == "check":
            c.add_argument("--ordx", required=True)
        c.set_defaults(fn=fn)

    c = sub.add_parser("rewrite")
    c.add_argument("--input", required=True, help="PolySystem JSON")
    c.add_argument("--min-poly", required=True, help="ascending coefficients of the monic minimal polynomial")
    c.add_argument("--generator", default="t")
    c.add_argument("--mode", choices=["integral", "full"], default="integral")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_rewrite)

    c = sub.add_parser("assemble")
    c.add_argument("--system", choices=["ext2nf", "inf2", "totreal"], required=True)
    c.add_argument("--params", help="SystemParams JSON; the toy parameters when omitted")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_assemble)

    vf = sub.add_parser("verify").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = vf.add_parser("suite")
    c.add_argument("--name", required=True)
    c.add_argument("--budget", action="append", help="name=value, repeatable")
    c.add_argument("--qmax", help="shorthand for --budget qmax=...")
    c.set_defaults(fn=cmd_verify_suite)
    return p


def _envelope(argv, args, ok, result, provenance, budgets):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": list(argv),
        "ok": ok,
        "seed": getattr(args, "seed", None),
        "budgets": budgets,
        "versions": {"diophkit": __version__, "python": platform.python_version(), "backend": BACKEND},
        "provenance": provenance,
        "result": result,
    }


def _emit(report, path):
    text = json.dumps(report, indent=2, sort_keys=True, default=str)
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def dispatch(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "qmax", None):
            args.budget = (args.budget or []) + [f"qmax={args.qmax}"]
        budgets = _budgets(getattr(args, "budget", None))
        ok, result, prov = args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (DiophkitError, ValueError, ArithmeticError, KeyError) as exc:
        out = getattr(args, "output", "-") if "args" in locals() else "-"
        _emit(_envelope(argv, args, False, {"error": type(exc).__name__, "message": str(exc)}, {}, {}), out)
        # bad inputs are usage errors; failed certificates and searches are verification failures
        is_usage = isinstance(exc, (ValueError, KeyError)) and not isinstance(exc, ArithmeticError)
        return 2 if is_usage else 1
    except OSError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    _emit(_envelope(argv, args, bool(ok), result, prov, budgets), args.output)
    return 0 if ok else 1


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

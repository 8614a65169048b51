"""Named verification suites: each returns a JSON-able report with pass/fail and counterexamples."""
from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from .errors import UnknownSuite

DEFAULT_SEED = 20240601


def _report(name, passed, budgets, started, **extra):
    out = {"suite": name, "passed": bool(passed), "budgets": dict(budgets),
           "seconds": round(time.perf_counter() - started, 3)}
    out.update(extra)
    return out


def order_lift_suite(budgets, seed):
    from .cyclotomic import verify_order_lift_grid

    t0 = time.perf_counter()
    b = {"qmax": 13, "xmax": 2000, "smax_factor": 3, **budgets}
    rep = verify_order_lift_grid(int(b["qmax"]), int(b["xmax"]), int(b["smax_factor"]))
    return _report("order-lift", rep.passed, b, t0, checked=rep.checked, mismatches=rep.mismatches,
                   corollary_failures=rep.corollary_failures, fallback=rep.fallback,
                   counterexamples=rep.counterexamples)


def rank_grid_suite(budgets, seed):
    from .rank_bounds.ranks import check_rank_inequality, rank_grid

    t0 = time.perf_counter()
    b = {"n_max": 8, **budgets}
    bad, count = [], 0
    for r, s, p2 in rank_grid(int(b["n_max"])):
        count += 1
        rep = check_rank_inequality(r, s, p2)
        if not rep.passed:
            bad.append({"r": r, "s": s, "p2": p2, **rep.to_json()})
    return _report("rank-grid", not bad, b, t0, checked=count, counterexamples=bad[:10])


def roundtrip_fields():
    from .number_field.field import NumberField

    return [("Q(i)", NumberField.quadratic(-1), (1, 0, 1)), ("Q(sqrt2)", NumberField.quadratic(2), (-2, 0, 1))]


def rewrite_roundtrip_case(rng, field, min_poly, box):
    """One seeded equation: (solutions over the field, solutions of the lowered system)."""
    from .rewrite.brute import extension_solutions, lowered_solutions, random_extension_equation
    from .rewrite.compiler import BasisSpec, coordinatize

    sysm = random_extension_equation(rng, "t")
    base_vars = [v for v in sysm.var_names if v != "x"]
    ext = extension_solutions(sysm.equations[0], field, "t", ["x"], base_vars, box)
    low = coordinatize(sysm, BasisSpec(min_poly, "t"))
    lowered = lowered_solutions(low, ["x"], base_vars, field.degree, box)
    return sysm, ext, lowered


def rewrite_roundtrip_suite(budgets, seed):
    t0 = time.perf_counter()
    b = {"count": 50, "box": 2, **budgets}
    rng = random.Random(seed)
    fields = roundtrip_fields()
    bad = []
    for i in range(int(b["count"])):
        name, field, mp = fields[i % 2]
        sysm, ext, low = rewrite_roundtrip_case(rng, field, mp, int(b["box"]))
        if ext != low:
            bad.append({"index": i, "field": name, "equation": str(sysm.equations[0]),
                        "only_extension": sorted(ext - low)[:5], "only_lowered": sorted(low - ext)[:5]})
    return _report("rewrite-roundtrip", not bad, b, t0, checked=int(b["count"]), counterexamples=bad)


def bound_two_samples(rng, count):
    """Precondition-satisfying (x, z) in Q(sqrt 2): |sigma(x)| >= 1 and |sigma(x)| < z at both embeddings."""
    from .number_field.field import NumberField
    from .rank_bounds.certify import compare_abs

    K = NumberField.quadratic(2)
    out = []
    while len(out) < count:
        x = K.element([rng.randint(-30, 30), rng.randint(-20, 20)])
        if x.is_zero() or any(compare_abs(x, i, 1) < 0 for i in range(2)):
            continue
        top = int(abs(x.coords[0]) + 2 * abs(x.coords[1])) + 1
        z = K.element([top + rng.randint(0, 5)])
        out.append((K, x, z))
    return out


def denominator_instances():
    """(K, x, z, variant, U) with integral outcome: both variants and the y1 = 0 branch."""
    from .number_field.field import NumberField
    from .rank_bounds.lemmas import ONE_Y, TWO_Y

    out = []
    K2 = NumberField.quadratic(2)
    # 7 splits in Q(sqrt 2), 3 and 5 are inert there
    for a, b in [(3, 1), (1, 1), (5, 2), (7, 3), (2, 1)]:
        out.append((K2, K2.element([a, b]), 1, TWO_Y, ()))
        out.append((K2, K2.element([Fraction(a, 7), Fraction(b, 7)]), 1, TWO_Y, (7,)))
    for a, b in [(1, 1), (2, 1), (4, 3)]:
        out.append((K2, K2.element([Fraction(a, 3), Fraction(b, 3)]), 1, ONE_Y, (3,)))
        out.append((K2, K2.element([Fraction(a, 5), Fraction(b, 5)]), 1, ONE_Y, (5,)))
    for c in (Fraction(2, 3), Fraction(7, 3), Fraction(11, 9)):
        out.append((K2, K2.element([c]), 1, ONE_Y, (3,)))
    out.append((K2, K2.element([3, 3]), 3, TWO_Y, ()))
    return out


def bound_two_suite(budgets, seed):
    from .rank_bounds.lemmas import bound_two_check, denominator_divisibility_check

    t0 = time.perf_counter()
    b = {"samples": 200, **budgets}
    rng = random.Random(seed)
    bad = []
    for K, x, z in bound_two_samples(rng, int(b["samples"])):
        cert = bound_two_check(K, x, z)
        if not cert:
            bad.append({"x": x.to_json_list(), "z": z.to_json_list(), **cert.to_json()})
    den_bad, branches = [], set()
    for K, x, z, variant, U in denominator_instances():
        rep = denominator_divisibility_check(K, x, z, variant, U)
        branches.add((variant, rep.branch))
        if not rep.integral:
            den_bad.append({"x": x.to_json_list(), "variant": variant, **rep.to_json()})
    return _report("bound-two", not bad and not den_bad, b, t0, counterexamples=bad[:10] + den_bad[:10],
                   denominator_branches=sorted(map(list, branches)))


def witness_instances(rng, count):
    """Seeded (params, x) pairs for comparing the valuation profile with the direct route."""
    from .witness_kit import build_params

    base = [(3, 2, 7), (3, 5, 7), (3, 2, 13), (3, 3, 7), (3, 4, 7), (3, 2, 19), (3, 6, 13)]
    params = [build_params(*t) for t in base]
    out = []
    while len(out) < count:
        P = rng.choice(params)
        k = rng.randint(-3, 6)
        unit = rng.choice([1, 2, 3, 5, -4, Fraction(3, 2), Fraction(-5, 11)])
        if Fraction(unit).numerator % P.p == 0 or Fraction(unit).denominator % P.p == 0:
            continue
        out.append((P, Fraction(P.p) ** k * unit))
    return out


def witness_profile_suite(budgets, seed):
    from .exact_arith.integers import padic_valuation
    from .witness_kit import NO_SOLUTION, build_params, direct_h_valuation, h_valuation_profile, necessity_check

    t0 = time.perf_counter()
    b = {"instances": 20, "sweep": 50, **budgets}
    P = build_params(3, 2, 7)
    bad = []
    for k in range(int(b["sweep"]) + 1):
        if necessity_check(P, k) == NO_SOLUTION:
            bad.append({"ord_x": k, "verdict": NO_SOLUTION})
    rng = random.Random(seed)
    for params, x in witness_instances(rng, int(b["instances"])):
        prof = h_valuation_profile(params, padic_valuation(params.p, x))
        direct = direct_h_valuation(params, x)
        if prof.ord_h is not None and direct != prof.ord_h:
            bad.append({"q": params.q, "b": str(params.b), "p": params.p, "x": str(x),
                        "profile": prof.ord_h, "direct": str(direct)})
    return _report("witness-profile", not bad, b, t0, counterexamples=bad[:10],
                   params=P.to_json())


def shift_independence_suite(budgets, seed):
    from .exact_arith.poly import Poly
    from .rank_bounds.shifts import ShiftFamily, next_shift, shift_determinant, shift_independence, \
        shift_independence_by_values

    t0 = time.perf_counter()
    b = {"d_max": 6, "shift_max": 9, **budgets}
    bad, count = [], 0
    for d in range(1, int(b["d_max"]) + 1):
        F = Poly([0] * d + [1])
        for size in range(1, d + 2):
            for sub in itertools.combinations(range(int(b["shift_max"]) + 1), size):
                fam = ShiftFamily(F, sub)
                count += 1
                a, v = shift_independence(fam), shift_independence_by_values(fam)
                if not (a and v):
                    bad.append({"d": d, "shifts": list(sub), "by_coefficients": a, "by_values": v})
    fam = ShiftFamily(Poly([0, 0, 1]), (0, 1))
    det = shift_determinant(fam)
    certificate = Poly([0, -2, 2])
    ok_det = det == certificate or det == -certificate
    return _report("shift-independence", not bad and ok_det, b, t0, checked=count, counterexamples=bad[:10],
                   determinant=str(det), next_shift=str(next_shift(fam)))


def assembler_tags_suite(budgets, seed):
    from .assembler import SYSTEMS, emitted_labels, expected_labels, toy_params, toy_roundtrip, toy_system, \
        toy_witness

    t0 = time.perf_counter()
    P = toy_params()
    bad = []
    for name in SYSTEMS:
        s1, s2 = toy_system(name), toy_system(name)
        if emitted_labels(s1) != expected_labels(name, P):
            diff = (emitted_labels(s1) - expected_labels(name, P)) + (expected_labels(name, P) - emitted_labels(s1))
            bad.append({"system": name, "label_mismatch": sorted(diff)})
        if s1.to_json() != s2.to_json():
            bad.append({"system": name, "serialization": "unstable"})
        rep = toy_roundtrip(s1, toy_witness(name))
        if rep.violated:
            bad.append({"system": name, "violated": rep.violated})
    return _report("assembler-tags", not bad, budgets, t0, counterexamples=bad)


SUITES = {
    "order-lift": order_lift_suite,
    "rank-grid": rank_grid_suite,
    "rewrite-roundtrip": rewrite_roundtrip_suite,
    "bound-two": bound_two_suite,
    "witness-profile": witness_profile_suite,
    "shift-independence": shift_independence_suite,
    "assembler-tags": assembler_tags_suite,
}


def run_suite(name: str, budgets=None, seed: int = DEFAULT_SEED) -> dict:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    out = SUITES[name](dict(budgets or {}), seed)
    out["seed"] = seed
    return out

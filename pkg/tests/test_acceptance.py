"""End-to-end acceptance checks at full budgets.

Each test prints one PASS/FAIL line; the lines are repeated in the terminal
summary.  Reference values come from big-integer arithmetic, sympy and mpmath
rather than from the package itself.
"""
import itertools
import random
import time
from collections import Counter
from fractions import Fraction

import mpmath
import sympy

from diophkit.assembler import SYSTEMS, emitted_labels, toy_params, toy_roundtrip, toy_system, toy_witness
from diophkit.cyclotomic import TowerSpec, cyclic_order_valuation, factor_count_cyclotomic, g_p_bound
from diophkit.extension_factory import find_inert_modulus, find_split_modulus, frobenius_power_test, gauss_period_field
from diophkit.exact_arith import Poly
from diophkit.number_field import NumberField, split_prime
from diophkit.rank_bounds.lemmas import ONE_Y, TWO_Y, bound_two_check, denominator_divisibility_check
from diophkit.rank_bounds.ranks import check_rank_inequality
from diophkit.rank_bounds.shifts import ShiftFamily, next_shift, shift_determinant, shift_independence
from diophkit.rewrite.compiler import BasisSpec, coordinatize
from diophkit.rewrite.brute import random_extension_equation
from diophkit.suites import DEFAULT_SEED, bound_two_samples, denominator_instances, run_suite
from diophkit.witness_kit import NO_SOLUTION, build_params, h_valuation_profile, necessity_check


def _ord(q, n):
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k


def test_order_lift_closed_form_exhaustive(criterion):
    t0 = time.perf_counter()
    rep = run_suite("order-lift")
    elapsed = time.perf_counter() - t0
    expected = sum(3 * q**3 * sum(1 for x in range(2, 2001) if x % q) for q in sympy.primerange(2, 14))
    # an independent sample through the public entry point, against exact big integers
    rng = random.Random(DEFAULT_SEED)
    spot_bad = 0
    for _ in range(3000):
        q = rng.choice([2, 3, 5, 7, 11, 13])
        x = rng.randrange(2, 2001)
        if x % q == 0:
            continue
        s = rng.randint(1, 3 * q**3)
        spot_bad += int(cyclic_order_valuation(q, x, s)) != _ord(q, x**s - 1)
    ok = rep["passed"] and rep["mismatches"] == 0 and rep["checked"] == expected and spot_bad == 0 and elapsed < 60
    criterion(1, "order lift, q <= 13, x <= 2000, s <= 3q^3", ok,
              f"{rep['checked']} pairs, {rep['mismatches']} mismatches, spot {spot_bad}, {elapsed:.1f}s")


def test_cyclotomic_factor_counts(criterion):
    counts = tuple(factor_count_cyclotomic(7, 5**j) for j in range(1, 7))
    derived = tuple(int(sympy.totient(5**j) // sympy.n_order(7, 5**j)) for j in range(1, 7))
    bound = g_p_bound(7, TowerSpec((5,)))
    X = sympy.Symbol("X")
    cross = []
    for m in range(2, 41):
        if m % 7 == 0:
            continue
        by_dedekind = split_prime(NumberField.cyclotomic(m, degree_cap=40), 7).count
        by_sympy = len(sympy.factor_list(sympy.cyclotomic_poly(m, X), modulus=7)[1])
        cross.append(by_dedekind == by_sympy == factor_count_cyclotomic(7, m))
    ok = counts == derived == (1, 5, 5, 5, 5, 5) and bound == 25 and max(counts) <= bound and all(cross)
    criterion(2, "factor counts of 7 along the 5-tower", ok, f"counts {counts}, bound {bound}, {len(cross)} cross-checks")


def test_extension_factory_moduli(criterion):
    inert, split = find_inert_modulus([2], 3, []), find_split_modulus([2], 3, [])
    K = gauss_period_field(31, 3)
    st5 = split_prime(K, 5)
    # 2 is a cube mod 31 and not mod 7; 5 is not a cube mod 31
    derived = pow(2, 2, 7) != 1 and pow(2, 10, 31) == 1 and pow(5, 10, 31) != 1
    ok = (inert, split) == (7, 31) and K.signature == (3, 0) and st5.is_inert() \
        and frobenius_power_test(31, 3, 5) is False and derived
    criterion(3, "inert and split moduli for 2 in degree 3", ok, f"inert {inert}, split {split}, signature {K.signature}")


def test_rank_grid_exhaustive(criterion):
    t0 = time.perf_counter()
    cases = [(2 * n - 2 * s, s, p2) for n in range(1, 9) for s in range(1, n + 1) for p2 in (3, 5, 7)]
    reps = [check_rank_inequality(*c) for c in cases]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed and r.inequality_holds and r.equality_E2_holds for r in reps) and elapsed < 1
    criterion(4, "rank inequality grid", ok, f"{len(cases)} cases in {elapsed:.3f}s")


class _Quad:
    """a + b*w with w^2 = d, just enough arithmetic to evaluate a polynomial."""

    def __init__(self, a, b=0, d=-1):
        self.a, self.b, self.d = Fraction(a), Fraction(b), d

    def _lift(self, o):
        return o if isinstance(o, _Quad) else _Quad(o, 0, self.d)

    def __add__(self, o):
        o = self._lift(o)
        return _Quad(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __mul__(self, o):
        o = self._lift(o)
        return _Quad(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def is_zero(self):
        return self.a == 0 and self.b == 0


def _eval_quad(poly, vals):
    total = _Quad(0, 0, vals["t"].d)
    for mono, c in poly.terms.items():
        term = _Quad(c, 0, vals["t"].d)
        for v, e in mono:
            for _ in range(e):
                term = term * vals[v]
        total = total + term
    return total


def _degree_without(poly, name):
    return max((sum(e for v, e in m if v != name) for m in poly.terms), default=0)


def test_rewrite_round_trip(criterion):
    t0 = time.perf_counter()
    rep = run_suite("rewrite-roundtrip", {"count": 50})
    elapsed = time.perf_counter() - t0
    # regenerate the same equations and count both solution sets by direct evaluation
    rng = random.Random(DEFAULT_SEED)
    box = range(-2, 3)
    discrepancies, max_deg, nonempty = 0, 0, 0
    for i in range(50):
        d, mp = ((-1, (1, 0, 1)), (2, (-2, 0, 1)))[i % 2]
        sysm = random_extension_equation(rng, "t")
        eq = sysm.equations[0]
        max_deg = max(max_deg, _degree_without(eq, "t"))
        low = coordinatize(sysm, BasisSpec(mp, "t"))
        has_z = "z" in sysm.var_names
        ext, lowered = set(), set()
        for a, b in itertools.product(box, repeat=2):
            for c in (box if has_z else [0]):
                vals = {"t": _Quad(0, 1, d), "x": _Quad(a, b, d), "z": _Quad(c, 0, d)}
                if _eval_quad(eq, vals).is_zero():
                    ext.add((a, b, c))
                ivals = {"u_x_0": a, "u_x_1": b, "z": c}
                if all(e.eval(ivals) == 0 for e in low.equations):
                    lowered.add((a, b, c))
        discrepancies += ext != lowered
        nonempty += bool(ext)
    ok = rep["passed"] and discrepancies == 0 and max_deg <= 3 and nonempty == 50 and elapsed < 60
    criterion(5, "rewriting round trip over Q(i) and Q(sqrt 2)", ok,
              f"50 equations, {discrepancies} discrepancies, suite {elapsed:.1f}s")


def test_bound_checks(criterion):
    samples = bound_two_samples(random.Random(DEFAULT_SEED), 200)
    r2 = mpmath.sqrt(2)
    good = 0
    for K, x, z in samples:
        a, b = (mpmath.mpf(c.numerator) / c.denominator for c in x.coords)
        zv = mpmath.mpf(z.coords[0].numerator) / z.coords[0].denominator
        pre = all(1 <= abs(a + sg * b * r2) < zv for sg in (1, -1))
        cert = bound_two_check(K, x, z)
        good += pre and cert.holds and cert.norm_y1 == x.coords[1] ** 2
    insts = denominator_instances()
    integral, variants, branches = 0, set(), set()
    for K, x, z, variant, U in insts:
        rep = denominator_divisibility_check(K, x, z, variant, U)
        Y = abs(x.norm()).denominator
        recomputed = (Y if variant == ONE_Y else Y * Y) * Fraction(-8) * x.coords[1] ** 2 / (Fraction(z) ** 2)
        integral += rep.integral and rep.value == recomputed and recomputed.denominator == 1
        variants.add(variant)
        branches.add(rep.branch)
    ok = good == 200 and integral == len(insts) == 20 and variants == {ONE_Y, TWO_Y} and "y1 = 0" in branches
    criterion(6, "bound checks on seeded samples and constructed instances", ok,
              f"{good}/200 bound-two, {integral}/20 integral, branches {sorted(branches)}")


def test_witness_kit_values(criterion):
    P = build_params(3, 2, 7)
    r_expected = 3**9 * (3**6 - 1) * (2**6 - 1)
    N = 2 * 3**3
    # the smallest positive m prime to 7 with 7^10 / m = 1 mod 54
    m_min = next(m for m in itertools.count(1) if m % 7 and (7**10 - m) % N == 0)
    prof = h_valuation_profile(P, -1)
    sweep = [necessity_check(P, k) for k in range(0, 51)]
    ok = (P.s == 10 and P.r.as_int() == r_expected and str(P.r) == "3^9*(3^6 - 1)*(2^6 - 1)"
          and P.g == Fraction(7**10, m_min) and m_min == 61
          and prof.ord_h % 3 == 2 and necessity_check(P, -1) == NO_SOLUTION
          and NO_SOLUTION not in sweep)
    criterion(7, "witness parameters for (3, 2, 7)", ok, f"s {P.s}, r {P.r}, g 7^10/{P.g.denominator}, ord_h {prof.ord_h}")


def test_shift_machinery(criterion):
    checked, bad = 0, 0
    T = sympy.Symbol("T")
    for d in range(1, 7):
        F = Poly([0] * d + [1])
        for size in range(1, d + 2):
            for sub in itertools.combinations(range(10), size):
                rows = [sympy.Poly((T + c) ** d, T).all_coeffs() for c in sub]
                ref = sympy.Matrix(rows).rank() == size
                checked += 1
                bad += not (ref and shift_independence(ShiftFamily(F, sub)))
    fam = ShiftFamily(Poly([0, 0, 1]), (0, 1))
    det = shift_determinant(fam)
    cert = all(abs(det(l)) == abs(2 * l * (l - 1)) for l in range(-10, 30))
    C = next_shift(fam)
    beyond = all(shift_independence(fam.with_shift(l)) for l in range(int(C), int(C) + 25))
    ok = bad == 0 and cert and beyond
    criterion(8, "shift independence and the next-shift certificate", ok, f"{checked} subsets, bound {C}")


# label multisets written out by hand for the toy parameters (p2 = 3, n = 1, h = 1)
def _hand_labels():
    K = 6
    ext = ["eq:supplement1", "eqdeg2:4.2f", "eqdeg2:10f"]
    ext += [f"eqdeg2:{lab}[{ix}={v}]" for lab, ix in (("1f", "k"), ("2f", "i"), ("3f", "i"), ("4f", "j"), ("9f", "j"))
            for v in range(K + 1)]
    inf = ["eq:supplement", "eqdeg2:1", "eqdeg2:4.2", "eqdeg2:7", "eqdeg2:9", "eqdeg2:10"]
    inf += [f"eqdeg2:{lab}[i={v}]" for lab in ("2", "3") for v in range(1, 5)]
    inf += [f"eqdeg2:4[j={v}]" for v in (1, 2)]
    tot = ["eq:1", "eq:8.2"]
    tot += [f"eq:{lab}[i={v}]" for lab in ("2", "3", "4", "5", "6", "7", "8", "8.1", "9", "10") for v in range(4)]
    return {"ext2nf": Counter(ext), "inf2": Counter(inf), "totreal": Counter(tot)}


def test_assembled_systems(criterion):
    hand = _hand_labels()
    P = toy_params()
    results = []
    for name in SYSTEMS:
        a, b = toy_system(name, P), toy_system(name, P)
        rep = toy_roundtrip(a, toy_witness(name, P))
        satisfied = sum(1 for _, st in rep.equations if st == "satisfied")
        results.append((name, emitted_labels(a) == hand[name], a.to_json().encode() == b.to_json().encode(),
                        not rep.violated and satisfied > 0))
    ok = all(all(r[1:]) for r in results)
    criterion(9, "assembled toy systems: labels, stable bytes, witness", ok,
              ", ".join(f"{n} {sum(hand[n].values())} labels" for n in SYSTEMS))

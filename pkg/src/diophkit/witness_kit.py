"""Integrality at a prime: witness parameters (s, g, r, h), valuation profiles, norm forms."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import cyclic_order_valuation, cyclotomic_poly
from .errors import BadPrime, InconsistentChain, NotIrreducibleAtResidue, ReducibleRadical
from .exact_arith.divisor import DivisorMap
from .exact_arith.ffpoly import FFPoly
from .exact_arith.integers import (
    as_rat,
    divisors,
    factorint,
    int_valuation,
    is_prime,
    is_rational_power,
    padic_valuation,
    rat_to_str,
)
from .exact_arith.poly import Poly
from .rewrite.mpoly import MPoly
from .rewrite.system import BASE, PolySystem

DEFAULT_BUDGET_BITS = 1 << 16

NEGATIVE_NOT_DIVISIBLE = "NegativeNotDivisible"
NEGATIVE_DIVISIBLE = "NegativeDivisible"
NON_NEGATIVE = "NonNegative"
BOUNDARY = "Boundary"

NO_SOLUTION = "NoSolution"
UNKNOWN = "Unknown"


# -- a positive integer kept as a product of b^e - delta -----------------------------


@dataclass(frozen=True)
class FactoredInt:
    """prod (base^exp - delta) with delta in {0, 1}; never expanded unless asked."""

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for base, exp, delta in self.factors:
            if base < 2 or exp < 1 or delta not in (0, 1):
                raise ValueError(f"bad factor ({base}, {exp}, {delta})")

    def bit_bounds(self) -> tuple[int, int]:
        """(lo, hi) with 2^lo <= value < 2^hi."""
        lo = hi = 0
        for base, exp, delta in self.factors:
            b_lo = base.bit_length() - 1
            lo += b_lo * exp - delta
            hi += base.bit_length() * exp
        return max(lo, 0), hi

    def valuation(self, p: int) -> int:
        """ord_p of the product, factor by factor with the order-lifting formula."""
        out = 0
        for base, exp, delta in self.factors:
            if delta == 0:
                out += exp * int_valuation(p, base)
                continue
            if base % p == 0:
                continue
            if p == 2:
                # x odd: ord_2(x^e - 1) is ord_2(x - 1) for odd e, else ord_2(x^2 - 1) + ord_2(e) - 1
                if exp % 2:
                    out += int_valuation(2, base - 1)
                else:
                    out += int_valuation(2, base * base - 1) + int_valuation(2, exp) - 1
            else:
                out += cyclic_order_valuation(p, base, exp)
        return out

    def mod(self, m: int) -> int:
        acc = 1 % m
        for base, exp, delta in self.factors:
            acc = acc * (pow(base, exp, m) - delta) % m
        return acc

    def as_int(self, budget_bits: int = DEFAULT_BUDGET_BITS) -> int:
        if self.bit_bounds()[1] > budget_bits:
            raise OverflowError(f"value needs up to {self.bit_bounds()[1]} bits, budget {budget_bits}")
        return _expand(self.factors)

    def divisor(self, budget_bits: int = 4096) -> DivisorMap:
        """Prime factorization, splitting b^e - 1 into cyclotomic values Phi_d(b) first."""
        if self.bit_bounds()[1] > budget_bits:
            raise OverflowError("too large to factor")
        out = DivisorMap()
        for base, exp, delta in self.factors:
            if delta == 0:
                out = out * DivisorMap.of(base) ** exp
                continue
            for d in divisors(exp):
                out = out * DivisorMap.of(int(cyclotomic_poly(d)(base)))
        return out

    def to_json(self) -> list:
        return [{"base": b, "exp": e, "minus": d} for b, e, d in self.factors]

    def __str__(self):
        parts = []
        for b, e, d in self.factors:
            parts.append(f"{b}^{e}" if d == 0 else f"({b}^{e} - 1)")
        return "*".join(parts) or "1"


@lru_cache(maxsize=64)
def _expand(factors) -> int:
    out = 1
    for b, e, d in factors:
        out *= b**e - d
    return out


# -- parameters -----------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessParams:
    q: int
    b: Fraction
    p: int
    divisor_of_b: DivisorMap
    s: int
    r: FactoredInt
    g: Fraction
    field_degree: int = 1
    z: int = 1

    @property
    def g_denominator(self) -> int:
        return self.g.denominator

    def exponent(self, budget_bits: int = DEFAULT_BUDGET_BITS) -> int:
        """r (s + 1), the exponent of x in h."""
        return self.r.as_int(budget_bits) * (self.s + 1)

    def order_bound(self, ramification: int = 1) -> Fraction:
        """(-q + 1) ord(g) / (r (s + 1)); integral solutions need ord x above this."""
        return Fraction((1 - self.q) * self.s * ramification, self.exponent())

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "b": rat_to_str(self.b),
            "p": self.p,
            "divisor_of_b": self.divisor_of_b.to_json(),
            "s": self.s,
            "r": {"factored": self.r.to_json(), "text": str(self.r)},
            "g": rat_to_str(self.g),
            "z": self.z,
        }
        lo, hi = self.r.bit_bounds()
        if hi <= 4096:
            out["r"]["value"] = str(self.r.as_int())
        out["r"]["bits"] = [lo, hi]
        return out


def radical_irreducible_mod_p(q: int, b: int, p: int) -> bool:
    """X^q - b irreducible over F_p for prime q and p not dividing q b."""
    if (p - 1) % q:
        return False
    return pow(b % p, (p - 1) // q, p) != 1


def _smallest_s(q: int, bound: int) -> int:
    s = max(bound, 1)
    while s % q == 0:
        s += 1
    return s


def _crt_denominator(p: int, s: int, modulus: int) -> int:
    """Least m > 0 with m = p^s mod modulus and p not dividing m."""
    m = pow(p, s, modulus) or modulus
    while m % p == 0:
        m += modulus
    return m


def build_params(q: int, b, p: int) -> WitnessParams:
    """Smallest admissible (s, r, g) over Q for the prime p."""
    if q < 3 or not is_prime(q):
        raise ValueError("q must be an odd prime")
    b = as_rat(b)
    if b.denominator != 1 or b == 0:
        raise ValueError("b must be a nonzero integer")
    bi = b.numerator
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if (q * bi) % p == 0:
        raise BadPrime(f"{p} divides q*b = {q * bi}")
    irreducible = radical_irreducible_mod_p(q, bi, p)
    # second route: Rabin's test on the reduction
    ff = FFPoly([(-bi) % p] + [0] * (q - 1) + [1], p)
    if irreducible != ff.is_irreducible():
        raise ArithmeticError(f"power-residue and Rabin tests disagree for X^{q} - {bi} mod {p}")
    if not irreducible:
        raise NotIrreducibleAtResidue(f"X^{q} - {bi} is reducible mod {p}")
    deg = 1
    dv = DivisorMap.of(bi)
    s = _smallest_s(q, max((3 * q * e * deg for e in dv.values()), default=0))
    qk = math.factorial(q * deg)
    factors = [(q, 3 * q * deg, 0), (q, qk, 1)] + [(A, qk, 1) for A in sorted(dv)]
    r = FactoredInt(tuple(factors))
    modulus = abs(bi) * q**3
    m = _crt_denominator(p, s, modulus)
    g = Fraction(p**s, m)
    params = WitnessParams(q, b, p, dv, s, r, g, deg)
    check_params(params)
    return params


def check_params(params: WitnessParams) -> list[str]:
    """Every stated invariant, checked independently; raises on the first failure."""
    q, s, p, g = params.q, params.s, params.p, params.g
    problems = []
    if s % q == 0:
        problems.append("s is divisible by q")
    bound = max((3 * q * e * params.field_degree for e in params.divisor_of_b.values()), default=0)
    if s < bound:
        problems.append("s below the bound")
    if params.r.valuation(q) < 1:
        problems.append("r is not divisible by q")
    if padic_valuation(p, g) != s:
        problems.append("ord_p(g) != s")
    N = abs(params.b.numerator) * q**3
    for ell, e in factorint(N).items():
        if padic_valuation(ell, g - 1) < e:
            problems.append(f"g - 1 has ord_{ell} below {e}")
    if g.denominator % p == 0:
        problems.append("p divides the denominator of g")
    if problems:
        raise ArithmeticError("; ".join(problems))
    return problems


# -- valuation profile ------------------------------------------------------------------


@dataclass(frozen=True)
class ValuationProfile:
    ord_x: int
    ord_h: int | None
    ord_h_mod_q: int | None
    branch: str
    term_orders: tuple[int, int]
    ramification: int = 1
    hypotheses_hold: bool = True

    def to_json(self):
        return {
            "ord_x": self.ord_x,
            "ord_h": self.ord_h,
            "ord_h_mod_q": self.ord_h_mod_q,
            "branch": self.branch,
            "term_orders": list(self.term_orders),
            "ramification": self.ramification,
            "hypotheses_hold": self.hypotheses_hold,
        }


def h_valuation_profile(params: WitnessParams, ord_x: int, ramification: int = 1) -> ValuationProfile:
    """ord of h = (q^3 b)^r (g^-1 x^{r(s+1)} + g^-q) + 1 from valuations only.

    ``ramification`` is the index e of a prime above p; then ord(g) = e s.
    The branch is only conclusive when q does not divide e; ``hypotheses_hold`` records that.
    """
    q, s = params.q, params.s
    e = ramification
    vg = e * s
    t1 = -vg + ord_x * params.exponent()
    t2 = -q * vg
    hyp = e % q != 0
    if t1 == t2:
        return ValuationProfile(ord_x, None, None, BOUNDARY, (t1, t2), e, hyp)
    m = min(t1, t2)
    if m >= 0:
        return ValuationProfile(ord_x, None, None, NON_NEGATIVE, (t1, t2), e, hyp)
    branch = NEGATIVE_DIVISIBLE if m % q == 0 else NEGATIVE_NOT_DIVISIBLE
    return ValuationProfile(ord_x, m, m % q, branch, (t1, t2), e, hyp)


def necessity_check(params: WitnessParams, ord_x: int, ramification: int = 1) -> str:
    """NoSolution when h cannot be a norm; Unknown otherwise (sufficiency is never claimed)."""
    prof = h_valuation_profile(params, ord_x, ramification)
    if prof.branch == NEGATIVE_NOT_DIVISIBLE and prof.hypotheses_hold:
        return NO_SOLUTION
    return UNKNOWN


def _unit_part(x: Fraction, p: int) -> tuple[int, int]:
    """(ord_p x, unit part of x mod p)."""
    v = padic_valuation(p, x)
    u = x / Fraction(p) ** v
    return v, u.numerator * pow(u.denominator, -1, p) % p


def direct_h_valuation(params: WitnessParams, x) -> int | tuple[str, int]:
    """ord_p(h) for a concrete rational x, from leading p-adic units of the two terms.

    Returns an int, or (">=", k) when the leading units cancel.
    """
    x = as_rat(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    q, p, g = params.q, params.p, params.g
    r = params.r.as_int()
    E = r * (params.s + 1)
    c = Fraction(q**3) * params.b
    vc, uc = _unit_part(c, p)
    vg, ug = _unit_part(g, p)
    vx, ux = _unit_part(x, p)
    ug_inv = pow(ug, -1, p)
    v1 = r * vc - vg + E * vx
    u1 = pow(uc, r, p) * ug_inv * pow(ux, E, p) % p
    v2 = r * vc - q * vg
    u2 = pow(uc, r, p) * pow(ug_inv, q, p) % p
    if v1 != v2:
        v, u = (v1, u1) if v1 < v2 else (v2, u2)
    else:
        u = (u1 + u2) % p
        v = v1
        if u == 0:
            return (">=", v1 + 1)
    if v < 0:
        return v
    if v > 0:
        return 0
    return 0 if (u + 1) % p else (">=", 1)


# -- norm form ------------------------------------------------------------------------------


def norm_form_eval(q: int, b, a) -> Fraction:
    """N(a_0, ..., a_{q-1}) = Res_T(T^q - b, sum a_i T^i), i.e. the norm of sum a_i beta^i."""
    b = as_rat(b)
    a = [as_rat(c) for c in a]
    if len(a) != q:
        raise ValueError(f"expected {q} coordinates")
    if is_rational_power(b, q):
        raise ReducibleRadical(f"{rat_to_str(b)} is a {q}-th power, so T^{q} - b is reducible")
    f = Poly([-b] + [0] * (q - 1) + [1])
    A = Poly(a)
    if A.is_zero():
        return Fraction(0)
    return f.resultant(A)


def _mpoly_det(m: list[list[MPoly]]) -> MPoly:
    """Determinant by expansion over column subsets (exact, fine for q <= 7)."""
    n = len(m)
    memo = {0: MPoly.const(1)}
    for row in range(n):
        nxt = {}
        for mask, val in memo.items():
            sign_base = 0
            for col in range(n):
                bit = 1 << col
                if mask & bit:
                    sign_base += 1
                    continue
                coeff = m[row][col]
                if coeff.is_zero():
                    continue
                # sign from the number of already-used columns to the right of col
                higher = bin(mask >> (col + 1)).count("1")
                term = val * coeff
                if higher % 2:
                    term = -term
                nxt[mask | bit] = nxt.get(mask | bit, MPoly()) + term
        memo = nxt
    return memo.get((1 << n) - 1, MPoly())


def norm_form_poly(q: int, b, names) -> MPoly:
    """The norm form as a polynomial in the coordinate variables ``names``."""
    b = as_rat(b)
    names = list(names)
    if len(names) != q:
        raise ValueError(f"expected {q} names")
    # multiplication by sum a_i beta^i on the basis beta^j, j < q
    mat = [[MPoly() for _ in range(q)] for _ in range(q)]
    for i, nm in enumerate(names):
        v = MPoly.var(nm)
        for j in range(q):
            k = i + j
            coef = v if k < q else v * b
            mat[k % q][j] = mat[k % q][j] + coef
    return _mpoly_det(mat)


# -- ramification bookkeeping ---------------------------------------------------------------


def ramification_profile(levels, q: int) -> tuple[int, int, bool]:
    """(m_e, m_f, unramified) over a tower: max ord_q(e), max ord_q(f), all e = 1.

    Each level is (degree, [(e, f), ...]) or an object with ``entries`` and
    ``degree``; the e*f sums must match the degrees.
    """
    m_e = m_f = 0
    unram = True
    for lev in levels:
        if hasattr(lev, "entries"):
            deg, entries = lev.degree, lev.entries
        else:
            deg, entries = lev
        entries = list(entries)
        if sum(e * f for e, f in entries) != deg:
            raise InconsistentChain(f"sum of e*f for {entries} is not {deg}")
        for e, f in entries:
            m_e = max(m_e, int_valuation(q, e))
            m_f = max(m_f, int_valuation(q, f))
            unram = unram and e == 1
    return m_e, m_f, unram


# -- the I family -----------------------------------------------------------------------------


def assemble_I_family(q: int, b, prime_set) -> PolySystem:
    """One equation N(a_{p,0}, ..., a_{p,q-1}) = h_p(x) per prime, sharing x.

    The coefficients of h are astronomically large, so each equation uses the
    constants h1_p = (q^3 b)^r g^-1 and h0_p = (q^3 b)^r g^-q + 1 as named
    symbols; their exact descriptions and the constant u = prod denom(g)^q are
    stored in the metadata.
    """
    b = as_rat(b)
    out = PolySystem()
    prime_set = list(prime_set)
    if not prime_set:
        out.meta.update({"u": "1", "primes": [], "z_default": 1})
        return out
    out.declare("x", BASE)
    symbols, consts, u = [], {}, 1
    for p, params in prime_set:
        if params.q != q or params.b != b or params.p != p:
            raise ValueError(f"parameters for {p} do not match (q, b, p)")
        names = [f"a_{p}_{i}" for i in range(q)]
        for nm in names:
            out.declare(nm, BASE)
        h1, h0 = f"h1_{p}", f"h0_{p}"
        symbols += [h1, h0]
        consts[h1] = {"formula": "(q^3 b)^r g^-1", "q": q, "b": rat_to_str(b), "g": rat_to_str(params.g),
                      "r": str(params.r)}
        consts[h0] = {"formula": "(q^3 b)^r g^-q + 1", "q": q, "b": rat_to_str(b), "g": rat_to_str(params.g),
                      "r": str(params.r)}
        E = params.exponent(budget_bits=1 << 20)
        eq = norm_form_poly(q, b, names) - MPoly.var(h1) * MPoly({(("x", E),): 1}) - MPoly.var(h0)
        out.add_equation(eq, f"I[p={p}]")
        u *= params.g_denominator**q
    out.meta.update({
        "symbols": sorted(symbols),
        "constants": consts,
        "u": str(u),
        "primes": [p for p, _ in prime_set],
        "z_default": 1,
        "note": "z = 1 is the default choice with z nonzero mod p; it is not canonical",
    })
    return out


def sample_ord_x_sweep(params: WitnessParams, lo: int = 0, hi: int = 50):
    return [(k, necessity_check(params, k)) for k in range(lo, hi + 1)]

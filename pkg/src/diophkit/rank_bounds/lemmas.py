"""Verifiers for the coordinate and valuation bounds used by the degree-2 definitions."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from ..cyclotomic import cyclotomic_poly
from ..errors import (
    BadLeadingCoefficient,
    HypothesesNotMet,
    NotFound,
    PreconditionFailed,
    RationalAngle,
    SearchLimitExceeded,
    Unsupported,
)
from ..exact_arith.integers import euler_phi, factorint, int_valuation, rat_to_str
from ..exact_arith.poly import Poly, isolate_real_roots, refine_root
from ..number_field.field import NFElement, NumberField
from ..number_field.roots import max_abs_root_bound
from ..number_field.splitting import split_prime, valuations_at
from .certify import all_abs_greater, compare_abs

ONE_Y = "OneY"
TWO_Y = "TwoY"
DEFAULT_R_CAP = 5000


def _coords2(K: NumberField, x: NFElement):
    if K.degree != 2:
        raise Unsupported("only quadratic extensions of Q are supported here")
    y0, y1 = (list(x.coords) + [Fraction(0)] * 2)[:2]
    return y0, y1


@dataclass
class DenominatorReport:
    variant: str
    X: int
    Y: int
    B: int
    C: int
    Z: int
    value: Fraction
    integral: bool
    branch: str = "general"
    checked: list = field(default_factory=list)

    def to_json(self):
        d = asdict(self)
        d["value"] = rat_to_str(self.value)
        return d


def denominator_divisibility_check(K: NumberField, x: NFElement, z: int, variant: str,
                                   denominator_primes=()) -> DenominatorReport:
    """Integrality of (Y/Z) N(2 alpha y1) (OneY) or (Y^2/Z) N(2 alpha y1) (TwoY).

    K = Q(alpha) is quadratic, x = y0 + y1 alpha, the divisor Z is generated by
    the rational integer z (so Z = z^2), and ``denominator_primes`` are the
    rational primes allowed in denominators.  For OneY these must stay prime
    in K; for TwoY any unramified prime is allowed.  Every hypothesis is
    checked on valuations and all failures are reported together.
    """
    if variant not in (ONE_Y, TWO_Y):
        raise ValueError(f"unknown variant {variant!r}")
    z = int(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    y0, y1 = _coords2(K, x)
    U = sorted(set(denominator_primes))
    failures, checked = [], []
    for p in U:
        if K.disc % p == 0:
            raise Unsupported(f"denominator prime {p} ramifies or divides the index")
        if variant == ONE_Y:
            st = split_prime(K, p)
            if not st.is_inert():
                failures.append(f"{p} is not inert in K; the OneY variant needs inert denominators")
    if not x.is_zero():
        for p in factorint(x.denominator()):
            if p not in U:
                failures.append(f"x has {p} in its denominator but {p} is not an allowed denominator prime")
        for p in U:
            vals = valuations_at(x, p)
            checked.append({"prime": p, "ord_x": vals})
            if any(v > 0 for v in vals):
                failures.append(f"ord of x above {p} is {vals}; must be <= 0")
        for q in factorint(abs(z)):
            if q in U:
                failures.append(f"z has the denominator prime {q}")
                continue
            if K.disc % q == 0:
                raise Unsupported(f"prime {q} of z divides the polynomial discriminant")
            need = int_valuation(q, z)
            vals = valuations_at(x, q)
            checked.append({"prime": q, "ord_x": vals, "ord_z": need})
            if any(v < need for v in vals):
                failures.append(f"x is not divisible by z at {q}: ord {vals} < {need}")
    if failures:
        raise HypothesesNotMet("valuation hypotheses fail", failures)

    norm_x = abs(x.norm())
    X, Y = norm_x.numerator, norm_x.denominator
    alpha = K.gen()
    n2 = (2 * alpha * K.element([y1])).norm()
    B, C = n2.numerator, n2.denominator
    Zn = z * z
    factor = Y if variant == ONE_Y else Y * Y
    value = Fraction(factor) * n2 / Zn
    return DenominatorReport(variant, X, Y, B, C, Zn, value, value.denominator == 1,
                             "y1 = 0" if y1 == 0 else "general", checked)


@dataclass
class BoundTwoCertificate:
    holds: bool
    norm_y1: Fraction
    bound: Fraction
    branch: str = "general"

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "norm_y1": rat_to_str(self.norm_y1), "bound": rat_to_str(self.bound),
                "branch": self.branch}


def bound_two_preconditions(K: NumberField, x: NFElement, z: NFElement, alpha: NFElement | None = None) -> list[str]:
    alpha = K.gen() if alpha is None else alpha
    r = K.signature[0]
    failures = []
    if z.is_zero():
        return ["z must be nonzero"]
    ratio = x / z
    for i in range(K.degree):
        if i < r:
            if compare_abs(x, i, 1) < 0:
                failures.append(f"|sigma_{i}(x)| < 1")
            if compare_abs(ratio, i, 1) >= 0:
                failures.append(f"|sigma_{i}(x)| >= |sigma_{i}(z)|")
        elif compare_abs(z, i, 1) < 0:
            failures.append(f"|tau_{i}(z)| < 1")
        if compare_abs(alpha, i, 1) <= 0:
            failures.append(f"|phi_{i}(alpha)| <= 1")
    return failures


def bound_two_check(K: NumberField, x: NFElement, z: NFElement, y1: NFElement | None = None,
                    alpha: NFElement | None = None) -> BoundTwoCertificate:
    """|N(y1)| <= |N(z) N(x)| under the embedding preconditions, compared with exact norms."""
    failures = bound_two_preconditions(K, x, z, alpha)
    if failures:
        raise PreconditionFailed("; ".join(failures))
    if y1 is None:
        y1 = K.element([_coords2(K, x)[1]])
    lhs = abs(y1.norm())
    rhs = abs(z.norm() * x.norm())
    return BoundTwoCertificate(lhs <= rhs, lhs, rhs, "y1 = 0" if y1.is_zero() else "general")


def threshold_A(Q: Poly, k, width=Fraction(1, 1024)) -> Fraction:
    """A rational A with Q(x) > k for every real x > A (upper end of the largest root of Q - k)."""
    if Q.degree < 1:
        raise BadLeadingCoefficient("Q must be nonconstant")
    if Q.lc <= 0:
        raise BadLeadingCoefficient("Q must have positive leading coefficient")
    f = (Q - Fraction(k)).squarefree_part()
    if f.degree < 1:
        return Fraction(0)
    roots = isolate_real_roots(f)
    if not roots:
        return Fraction(0)
    a, b = roots[-1]
    if a == b:
        return b
    exact = [r for r in f.rational_roots() if a < r <= b]
    if exact:
        return exact[0]
    return refine_root(f, a, b, Fraction(width))[1]


def threshold_B(Q: Poly) -> Fraction:
    return threshold_A(Q, 2) + 1


def increasing_beyond(Q: Poly) -> Fraction:
    """A point beyond which Q' > 0 (Q' has no real root there and positive leading coefficient)."""
    d = Q.derivative()
    if d.degree < 1:
        return Fraction(0)
    roots = isolate_real_roots(d.squarefree_part())
    return roots[-1][1] if roots else Fraction(0)


def _eval_poly_at(P: Poly, x: NFElement) -> NFElement:
    acc = x.field.zero()
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def _certify_root_bound(P: Poly, l) -> bool:
    for bits in (64, 128, 256, 512):
        if max_abs_root_bound(P, bits) < l:
            return True
    return False


def escape_terms(x: NFElement, P: Poly, p2: int, n: int, l: int, N_E: int = 1):
    """x_k = Q(x - 8(k+1)l) with Q(X) = P(N_E X), for k = 0..2 p2 n."""
    Q = P.scale_arg(N_E)
    for k in range(2 * p2 * n + 1):
        yield k, _eval_poly_at(Q, x - 8 * (k + 1) * l)


def escape_index(x: NFElement, P: Poly, p2: int, n: int, l: int, N_E: int = 1) -> int:
    """Least k in 0..2 p2 n with |phi(x_k)| > 2 at every embedding, certified by intervals."""
    if l <= 2:
        raise PreconditionFailed("l must exceed 2")
    if not _certify_root_bound(P, l):
        raise PreconditionFailed(f"l = {l} does not exceed every |root| of P")
    for k, xk in escape_terms(x, P, p2, n, l, N_E):
        if all_abs_greater(xk, 2):
            return k
    raise NotFound("no escaping index; this contradicts the ball-disjointness count")


def _is_root_of_unity(u: NFElement) -> bool:
    mp = u.minpoly()
    d = mp.degree
    for m in range(1, 6 * d * d + 7):
        if euler_phi(m) == d and cyclotomic_poly(m) == mp:
            return True
    return False


def unit_power_approx(unit: NFElement, k: int, lam, indices=None, r_cap: int = DEFAULT_R_CAP) -> int:
    """Least r with |tau(unit)^r - 1| < 2^-k lam at every listed embedding.

    ``indices`` defaults to the embeddings where |tau(unit)| = 1 exactly.  The
    ratio bound |tau(u^{rk} - 1)/tau(u^r - 1) - k| < lam is re-verified at the
    returned r.
    """
    lam = Fraction(lam)
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    K = unit.field
    if unit == K.one():
        raise PreconditionFailed("tau(unit) = 1")
    if _is_root_of_unity(unit):
        raise RationalAngle("the unit is a root of unity, so tau(unit)^r = 1 for some r")
    if indices is None:
        indices = [i for i in range(K.degree) if compare_abs(unit, i, 1) == 0]
    indices = list(indices)
    if not indices:
        raise PreconditionFailed("no embedding places the unit on the unit circle")
    for i in indices:
        if compare_abs(unit, i, 1) != 0:
            raise PreconditionFailed(f"|tau_{i}(unit)| != 1")
    target = lam / 2**k
    power = K.one()
    for r in range(1, r_cap + 1):
        power = power * unit
        d = power - 1
        if d.is_zero():
            continue
        if all(compare_abs(d, i, target) < 0 for i in indices):
            ratio = ((power**k) - 1) / d - k
            if all(compare_abs(ratio, i, lam) < 0 for i in indices):
                return r
    raise SearchLimitExceeded(f"no admissible r up to {r_cap}")


def salem_test_unit(degree: int = 4) -> NumberField:
    """Fields generated by a Salem number: all but two conjugates lie on the unit circle."""
    polys = {4: [1, -1, -1, -1, 1], 6: [1, 0, -1, -1, -1, 0, 1]}
    if degree not in polys:
        raise ValueError("available degrees: 4, 6")
    return NumberField(Poly(polys[degree]), name=f"Salem field of degree {degree}")

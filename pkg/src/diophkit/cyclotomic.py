"""Splitting arithmetic in cyclotomic fields and towers of them."""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache

from ._accel import kernels, modulus_for
from .errors import HypothesisViolated, NotCoprime, RamifiedPrime
from .exact_arith.integers import euler_phi, factorint, int_valuation, is_prime, mult_order, require_prime
from .exact_arith.poly import Poly


class FallbackDirect(int):
    """An order value obtained by direct computation outside the lifting hypotheses."""

    method = "fallback_direct"

    def __repr__(self):
        return f"FallbackDirect({int(self)})"


_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, Poly] = {}


def cyclotomic_poly(m: int) -> Poly:
    """Phi_m by exact division of x^m - 1 by Phi_d for the proper divisors d."""
    if m < 1:
        raise ValueError("m must be positive")
    with _cyclo_lock:
        cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    f = Poly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            f = f.exact_div(cyclotomic_poly(d))
    with _cyclo_lock:
        _cyclo_cache[m] = f
    return f


def direct_order_valuation(q: int, x: int, s: int) -> int:
    """ord_q(x^s - 1) from the expanded integer."""
    v = x**s - 1
    if v == 0:
        raise ValueError("x^s - 1 vanishes")
    return int_valuation(q, v)


@lru_cache(maxsize=65536)
def lift_parameters(q: int, x: int) -> tuple[int, int]:
    """(n, r) with n = ord of x mod q and r = ord_q(x^n - 1)."""
    n = mult_order(x, q) if q > 2 else 1
    return n, int_valuation(q, pow(x, n) - 1)


def cyclic_order_valuation(q: int, x: int, s: int, *, strict: bool = False) -> int:
    """ord_q(x^s - 1) via order lifting.

    Zero unless n | s; otherwise r + ord_q(s / n).  For q = 2 and
    x = 3 mod 4 with s even the lifting step does not apply: with ``strict``
    this raises HypothesisViolated, otherwise the direct value is returned
    wrapped as FallbackDirect.
    """
    require_prime(q, "q")
    if x < 2:
        raise ValueError("x must be at least 2")
    if s < 1:
        raise ValueError("s must be positive")
    if x % q == 0:
        raise NotCoprime(f"gcd({x}, {q}) != 1")
    n, r = lift_parameters(q, x)
    if q == 2 and r == 1 and s % 2 == 0:
        if strict:
            raise HypothesisViolated("ord_2(x - 1) = 1 with even s is outside the lifting lemma")
        return FallbackDirect(direct_order_valuation(q, x, s))
    if s % n:
        return 0
    return r + int_valuation(q, s // n)


@dataclass(frozen=True)
class TowerSpec:
    base_primes: tuple[int, ...]
    two_cap: int | None = None

    def __post_init__(self):
        primes = tuple(self.base_primes)
        object.__setattr__(self, "base_primes", primes)
        if len(set(primes)) != len(primes):
            raise ValueError("tower primes must be distinct")
        for q in primes:
            require_prime(q, "tower prime")
        if (2 in primes) != (self.two_cap is not None):
            raise ValueError("two_cap is required exactly when 2 is a tower prime")

    def to_json(self) -> dict:
        out = {"base_primes": list(self.base_primes)}
        if self.two_cap is not None:
            out["two_cap"] = self.two_cap
        return out


@dataclass(frozen=True)
class OrderData:
    p: int
    per_qi: tuple[tuple[int, int], ...]
    primes: tuple[int, ...] = field(default=())


def order_data(p: int, primes) -> OrderData:
    """n_i = order of p mod q_i^{a_i} (a_i = 2 for q_i = 2) and r_i = ord_{q_i}(p^{n_i} - 1)."""
    require_prime(p, "p")
    out = []
    for q in primes:
        if q == p:
            raise RamifiedPrime(f"{p} is one of the tower primes")
        a = 2 if q == 2 else 1
        n = mult_order(p, q**a)
        out.append((n, int_valuation(q, p**n - 1)))
    return OrderData(p, tuple(out), tuple(primes))


def degree_from_profile(data: OrderData, ls) -> int:
    """LCM(n_i q_i^{l_i}): the degree over F_p of a primitive root of unity of order prod q_i^{r_i + l_i}."""
    out = 1
    for (n, _), q, l in zip(data.per_qi, data.primes, ls):
        out = math.lcm(out, n * q**l)
    return out


def match_profile(data: OrderData, m: int):
    """The exponents l_i when m = prod q_i^{r_i + l_i} with every l_i >= 0, else None."""
    fac = factorint(m)
    if set(fac) != set(data.primes):
        return None
    ls = []
    for (n, r), q in zip(data.per_qi, data.primes):
        l = fac[q] - r
        if l < 0:
            return None
        ls.append(l)
    return ls


def residue_degree_cyclotomic(p: int, m: int) -> int:
    if math.gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) != 1")
    deg = mult_order(p, m)
    primes = tuple(sorted(factorint(m)))
    data = order_data(p, primes)
    ls = match_profile(data, m)
    if ls is not None and degree_from_profile(data, ls) != deg:
        raise ArithmeticError(f"profile degree disagrees with the multiplicative order for p={p}, m={m}")
    return deg


def factor_count_cyclotomic(p: int, m: int) -> int:
    if math.gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) != 1")
    if m <= 2:
        return 1
    return euler_phi(m) // mult_order(p, m)


def g_p_bound(p: int, tower: TowerSpec) -> int:
    if p in tower.base_primes:
        raise RamifiedPrime(f"{p} ramifies in the tower")
    data = order_data(p, tower.base_primes)
    out = 1
    for (_, r), q in zip(data.per_qi, tower.base_primes):
        out *= q**r
    return out


def kw_container(ramified, two_cap: int | None = None) -> TowerSpec:
    ramified = list(ramified)
    if not ramified:
        raise ValueError("at least one ramified prime is required")
    return TowerSpec(tuple(ramified), two_cap if 2 in ramified else None)


def tower_levels(tower: TowerSpec, max_exp: int):
    """Prime-power levels q^1..q^max_exp of each tower prime (2 stops at two_cap)."""
    for q in tower.base_primes:
        top = min(max_exp, tower.two_cap) if q == 2 else max_exp
        for j in range(1, top + 1):
            yield q**j


def analyze(p: int, m: int) -> dict:
    """Order, factor count and tower bound for the cyclotomic level m."""
    if not is_prime(p):
        require_prime(p, "p")
    primes = tuple(sorted(factorint(m)))
    tower = TowerSpec(primes, max(1, int_valuation(2, m)) if 2 in primes else None)
    return {
        "order": residue_degree_cyclotomic(p, m),
        "factor_count": factor_count_cyclotomic(p, m),
        "bound": g_p_bound(p, tower),
        "note": "counts are for the full cyclotomic level, not its maximal real subfield",
    }


@dataclass
class OrderLiftReport:
    checked: int = 0
    mismatches: int = 0
    corollary_failures: int = 0
    fallback: int = 0
    overflow_settled: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0 and self.corollary_failures == 0


def _corollary_holds(q: int, n: int, r: int, s: int, direct: int) -> bool:
    step, l = n, 0
    while True:
        lhs, rhs = direct >= r + l, s % step == 0
        if lhs != rhs:
            return False
        if not lhs:
            return True
        step *= q
        l += 1


def verify_order_lift_grid(qmax: int = 13, xmax: int = 2000, smax_factor: int = 3) -> OrderLiftReport:
    """Closed form vs direct valuation over all primes q <= qmax, x in [2, xmax], s <= smax_factor*q^3.

    The direct side reduces x^s - 1 modulo a power of q below 2**32; when that
    residue is zero the value is recomputed from the exact integer.
    """
    rep = OrderLiftReport()
    for q in (p for p in range(2, qmax + 1) if is_prime(p)):
        smax = smax_factor * q**3
        modulus = modulus_for(q)
        for x in range(2, xmax + 1):
            if x % q == 0:
                continue
            n, r = lift_parameters(q, x)
            if q == 2 and r == 1:
                # outside the lemma: every value comes from direct computation
                for s in range(1, smax + 1):
                    v = cyclic_order_valuation(q, x, s)
                    rep.fallback += isinstance(v, FallbackDirect)
                    rep.checked += 1
                continue
            bad, first, cor, overflow = kernels.order_lift_scan(q, x, n, r, smax, modulus, True)
            rep.checked += smax
            rep.mismatches += bad
            rep.corollary_failures += cor
            if bad and len(rep.counterexamples) < 10:
                rep.counterexamples.append({"q": q, "x": x, "s": first})
            for s in overflow:
                direct = direct_order_valuation(q, x, s)
                closed = 0 if s % n else r + int_valuation(q, s // n)
                rep.overflow_settled += 1
                if not _corollary_holds(q, n, r, s, direct):
                    rep.corollary_failures += 1
                if direct != closed:
                    rep.mismatches += 1
                    if len(rep.counterexamples) < 10:
                        rep.counterexamples.append({"q": q, "x": x, "s": s})
    return rep

"""Integer and rational primitives: primality, factoring, orders, valuations, CRT.

Everything here is exact.  Rationals are :class:`fractions.Fraction`, which is
already canonically reduced with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable

from ..errors import FactorizationTooHard, NotCoprime, NotCoprimeModuli, NotPrime

Rat = Fraction

TRIAL_DIVISION_BOUND = 10**6

# Miller-Rabin with these witnesses is deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


@total_ordering
class PlusInfinity:
    """Order of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("PlusInfinity")

    def __repr__(self):
        return "PlusInfinity"


INF = PlusInfinity()


def as_rat(x) -> Fraction:
    """Parse an int, Fraction or exact decimal/"a/b" string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_to_str(x: Fraction) -> str:
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_LIMIT:
        raise FactorizationTooHard(f"primality of a {n.bit_length()}-bit integer is out of desk range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, what: str = "modulus") -> None:
    if not is_prime(p):
        raise NotPrime(f"{what} {p} is not prime")


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=4096)
def _factorint_cached(n: int, bound: int) -> tuple[tuple[int, int], ...]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d = 5
    step = 2
    while d * d <= n and d <= bound:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        if d * d > n or is_prime(n):
            out.append((n, 1))
        else:
            raise FactorizationTooHard(f"cofactor {n} survives trial division to {bound}")
    return tuple(out)


def factorint(n: int, bound: int = TRIAL_DIVISION_BOUND) -> dict[int, int]:
    """Factor ``|n|`` by trial division up to ``bound`` plus a primality check.

    Raises FactorizationTooHard when a composite cofactor is left over.
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    return dict(_factorint_cached(n, bound))


def euler_phi(n: int) -> int:
    result = n
    for p in factorint(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def mult_order(a: int, n: int) -> int:
    """Smallest k >= 1 with a**k == 1 (mod n)."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    a %= n
    k = euler_phi(n)
    for p, e in factorint(k).items():
        for _ in range(e):
            if pow(a, k // p, n) == 1:
                k //= p
            else:
                break
    return k


def int_valuation(q: int, n: int) -> int:
    """ord_q of a nonzero integer; no primality check."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def padic_valuation(q: int, x) -> int | PlusInfinity:
    require_prime(q, "valuation prime")
    x = as_rat(x)
    if x == 0:
        return INF
    v = 0
    if x.numerator % q == 0:
        v = int_valuation(q, x.numerator)
    elif x.denominator % q == 0:
        v = -int_valuation(q, x.denominator)
    return v


def crt(congruences: Iterable[tuple[int, int]]) -> int:
    """Smallest nonnegative solution of a list of (residue, modulus) pairs."""
    x, m = 0, 1
    for r, n in congruences:
        if n < 1:
            raise ValueError("moduli must be positive")
        if math.gcd(m, n) != 1:
            raise NotCoprimeModuli(f"modulus {n} shares a factor with {m}")
        t = ((r - x) * pow(m, -1, n)) % n if n > 1 else 0
        x += m * t
        m *= n
        x %= m
    return x


def is_perfect_power(n: int, k: int) -> bool:
    """True iff the integer n is k-th power of an integer (k odd allows negatives)."""
    if n < 0:
        if k % 2 == 0:
            return False
        n = -n
    if n in (0, 1):
        return True
    r = round(n ** (1.0 / k)) if n.bit_length() < 900 else _iroot(n, k)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return True
    c = _iroot(n, k)
    return c**k == n


def _iroot(n: int, k: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_rational_power(x: Fraction, k: int) -> bool:
    x = as_rat(x)
    return is_perfect_power(x.numerator, k) and is_perfect_power(x.denominator, k)


def sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """A rational upper bound for sqrt(x) within about 2**-bits relative error."""
    x = as_rat(x)
    if x < 0:
        raise ValueError("negative argument")
    if x == 0:
        return Fraction(0)
    a, b = x.numerator, x.denominator
    scale = 1 << (2 * bits)
    s = math.isqrt(a * b * scale)
    if s * s != a * b * scale:
        s += 1
    return Fraction(s, b << bits)


def sqrt_lower(x: Fraction, bits: int = 64) -> Fraction:
    x = as_rat(x)
    if x <= 0:
        return Fraction(0)
    a, b = x.numerator, x.denominator
    return Fraction(math.isqrt(a * b << (2 * bits)), b << bits)

"""Decomposition of rational primes and valuations at unramified primes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotPrime, Unsupported
from ..exact_arith.ffpoly import FFPoly, factor_poly_mod_p
from ..exact_arith.hensel import divmod_monic, hensel_lift
from ..exact_arith.integers import int_valuation, is_prime
from ..exact_arith.poly import Poly
from .field import NFElement, NumberField


class _InconclusiveType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Inconclusive"

    def __bool__(self):
        return False


Inconclusive = _InconclusiveType()


@dataclass(frozen=True)
class SplitType:
    """Sorted (e, f) pairs of the primes above p."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.entries)

    @property
    def count(self) -> int:
        return len(self.entries)

    def is_totally_split(self) -> bool:
        return all(ef == (1, 1) for ef in self.entries)

    def is_inert(self) -> bool:
        return len(self.entries) == 1 and self.entries[0][0] == 1

    def is_unramified(self) -> bool:
        return all(e == 1 for e, _ in self.entries)

    def residue_degrees(self) -> list[int]:
        return [f for _, f in self.entries]

    def to_json(self) -> list[list[int]]:
        return [list(ef) for ef in self.entries]

    def __iter__(self):
        return iter(self.entries)


def _dedekind_regular(f: Poly, p: int, factors) -> bool:
    """Dedekind's index test: True when p does not divide [O_K : Z[theta]]."""
    fi = f.int_coeffs()
    prod = [1]
    for g, e in factors:
        for _ in range(e):
            prod = _int_mul(prod, list(g.coeffs))
    diff = [(fi[i] if i < len(fi) else 0) - (prod[i] if i < len(prod) else 0) for i in range(max(len(fi), len(prod)))]
    if any(c % p for c in diff):
        raise ArithmeticError("lifted factorization does not match f mod p")
    F = FFPoly([c // p for c in diff], p, check_prime=False)
    for g, e in factors:
        if e >= 2 and g.divides(F):
            return False
    return True


def _int_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def split_prime(K: NumberField, p: int) -> SplitType | _InconclusiveType:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if K.degree == 1:
        return SplitType(((1, 1),))
    factors = factor_poly_mod_p(FFPoly.from_poly(K.poly, p))
    if K.disc % p != 0:
        return SplitType(tuple((1, g.degree) for g, _ in factors))
    if _dedekind_regular(K.poly, p, factors):
        return SplitType(tuple((e, g.degree) for g, e in factors))
    return Inconclusive


@dataclass(frozen=True)
class PrimeAbove:
    """A prime of K above p with p unramified and prime to the index of f."""

    field: NumberField
    p: int
    factor: tuple[int, ...]  # monic factor of f mod p
    index: int

    @property
    def residue_degree(self) -> int:
        return len(self.factor) - 1


def primes_above(K: NumberField, p: int) -> list[PrimeAbove]:
    if K.disc % p == 0:
        raise Unsupported(f"{p} divides the polynomial discriminant; valuations need a maximal order")
    factors = factor_poly_mod_p(FFPoly.from_poly(K.poly, p))
    return [PrimeAbove(K, p, g.coeffs, i) for i, (g, _) in enumerate(factors)]


def _integral_valuation(a: list[int], f_int: list[int], factors, idx: int, p: int) -> int:
    k = 4
    while True:
        lifted = hensel_lift(f_int, factors, k)
        m = p**k
        _, r = divmod_monic(a, lifted[idx], m)
        if r:
            return min(int_valuation(p, c) for c in r if c % m)
        k *= 2


def valuations_at(x: NFElement, p: int) -> list[int]:
    """ord_P(x) for each prime P above p (unramified, p prime to disc)."""
    K = x.field
    if x.is_zero():
        raise ValueError("valuation of zero")
    if x.is_rational():
        v = _rat_val(x.to_rat(), p)
        return [v for _ in primes_above(K, p)]
    d = x.denominator()
    a = [int(c * d) for c in x.coords]
    factors = [g for g, _ in factor_poly_mod_p(FFPoly.from_poly(K.poly, p))]
    if K.disc % p == 0:
        raise Unsupported(f"{p} divides the polynomial discriminant")
    shift = int_valuation(p, d)
    return [_integral_valuation(a, K.poly.int_coeffs(), factors, i, p) - shift for i in range(len(factors))]


def _rat_val(c: Fraction, p: int) -> int:
    if c.numerator % p == 0:
        return int_valuation(p, c.numerator)
    if c.denominator % p == 0:
        return -int_valuation(p, c.denominator)
    return 0

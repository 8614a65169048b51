"""Polynomials over a prime field F_p and their factorization.

Factoring runs square-free decomposition, distinct-degree factorization and
then Cantor-Zassenhaus equal-degree splitting.  The splitting step draws from
a ``random.Random`` so results are reproducible under a fixed seed; the
returned factor list is sorted, so the seed never changes the output.
"""
from __future__ import annotations

import random
from typing import Iterable

from ..errors import ZeroPolynomial
from .integers import require_prime


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % p
        quot[i - db] = c
        if c:
            for j, y in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * y) % p
    return _trim(quot), _trim(rem[:db])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(base, e, mod, p):
    result = [1]
    base = _mod(base, mod, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _mod(_mul(base, base, p), mod, p)
    return result


def _deriv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


class FFPoly:
    """Immutable polynomial over F_p with coefficients in [0, p), ascending."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Iterable[int], p: int, check_prime: bool = True):
        if check_prime:
            require_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % p for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("FFPoly is immutable")

    @classmethod
    def from_poly(cls, f, p: int) -> "FFPoly":
        """Reduce a rational polynomial whose denominators are prime to p."""
        cs = []
        for c in f.coeffs:
            if c.denominator % p == 0:
                raise ValueError(f"coefficient {c} is not p-integral for p={p}")
            cs.append(c.numerator * pow(c.denominator, -1, p))
        return cls(cs, p)

    def _new(self, cs) -> "FFPoly":
        return FFPoly(cs, self.p, check_prime=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, FFPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __lt__(self, other):
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __repr__(self):
        return f"FFPoly({list(self.coeffs)}, p={self.p})"

    def __add__(self, other):
        return self._new(_add(list(self.coeffs), list(other.coeffs), self.p))

    def __sub__(self, other):
        return self._new(_sub(list(self.coeffs), list(other.coeffs), self.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new([c * other for c in self.coeffs])
        return self._new(_mul(list(self.coeffs), list(other.coeffs), self.p))

    def divmod(self, other):
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.p)
        return self._new(q), self._new(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __pow__(self, e: int):
        out = self._new([1])
        for _ in range(e):
            out = out * self
        return out

    def monic(self) -> "FFPoly":
        return self._new(_monic(list(self.coeffs), self.p))

    def gcd(self, other) -> "FFPoly":
        return self._new(_gcd(list(self.coeffs), list(other.coeffs), self.p))

    def derivative(self) -> "FFPoly":
        return self._new(_deriv(list(self.coeffs), self.p))

    def divides(self, other) -> bool:
        return (other % self).is_zero()

    def eval(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def roots(self) -> list[int]:
        if self.p < 5000:
            return [x for x in range(self.p) if self.eval(x) == 0]
        return sorted((-f.coeffs[0]) % self.p for f, _ in factor_poly_mod_p(self) if f.degree == 1)

    def is_irreducible(self) -> bool:
        """Rabin-style test: no common factor with x^(p^k) - x for k <= deg/2."""
        n = self.degree
        if n < 1:
            return False
        if n == 1:
            return True
        f = list(_monic(list(self.coeffs), self.p))
        p = self.p
        xpk = [0, 1]
        for _ in range(n // 2):
            xpk = _powmod(xpk, p, f, p)
            g = _gcd(f, _sub(xpk, [0, 1], p), p)
            if len(g) > 1:
                return False
        # x^(p^n) = x mod f, required for irreducibility after the gcd checks pass
        for _ in range(n - n // 2):
            xpk = _powmod(xpk, p, f, p)
        return _sub(xpk, [0, 1], p) == []

    def factor(self, rng: random.Random | None = None) -> list[tuple["FFPoly", int]]:
        return factor_poly_mod_p(self, rng)


def _squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic f -> [(g_i, i)] with f = prod g_i^i and each g_i squarefree."""
    out = []
    d = _deriv(f, p)
    if not d:
        # f is a p-th power: f(x) = g(x^p) = g(x)^p over F_p
        g = [f[i] for i in range(0, len(f), p)]
        return [(h, e * p) for h, e in _squarefree_decomposition(g, p)]
    c = _gcd(f, d, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        fac = _divmod(w, y, p)[0]
        if len(fac) > 1:
            out.append((_monic(fac, p), i))
        w = y
        c = _divmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        g = [c[j] for j in range(0, len(c), p)]
        out.extend((h, e * p) for h, e in _squarefree_decomposition(_monic(g, p), p))
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
    if len(f) > 1:
        out.append((_monic(f, p), len(f) - 1))
    return out


def _equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = list(a)
            cur = list(a)
            for _ in range(d - 1):
                cur = _mod(_mul(cur, cur, p), f, p)
                t = _add(t, cur, p)
            b = t
        else:
            b = _sub(_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gcd(f, b, p)
        if 1 < len(g) < len(f):
            h = _divmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(_monic(h, p), d, p, rng)


def factor_poly_mod_p(f: FFPoly, rng: random.Random | None = None) -> list[tuple[FFPoly, int]]:
    """Monic irreducible factors of f with multiplicities, sorted by (degree, coeffs)."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(0)
    p = f.p
    if f.degree == 0:
        return []
    monic = _monic(list(f.coeffs), p)
    out = []
    for g, e in _squarefree_decomposition(monic, p):
        for h, d in _distinct_degree(g, p):
            for piece in _equal_degree(h, d, p, rng):
                out.append((FFPoly(piece, p, check_prime=False), e))
    merged: dict[FFPoly, int] = {}
    for g, e in out:
        merged[g] = merged.get(g, 0) + e
    return sorted(merged.items(), key=lambda t: (t[0].degree, t[0].coeffs))

"""Dense univariate polynomials over Q with exact Fraction coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .integers import as_rat, divisors, rat_to_str


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------
    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, deg: int, c=1) -> "Poly":
        return cls([0] * deg + [c])

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-as_rat(r), 1])
        return out

    # -- basic properties ----------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({[rat_to_str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = rat_to_str(abs(c)) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return Poly(a * c for a in self.coeffs)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        inv_lc = 1 / other.lc
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lc
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, c):
        c = as_rat(c)
        return Poly(a / c for a in self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.lc

    # -- evaluation and composition ---------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval(self, x) -> Fraction:
        return Fraction(self(as_rat(x)))

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "Poly":
        """f(x + c)."""
        return self.compose(Poly([as_rat(c), 1]))

    def scale_arg(self, c) -> "Poly":
        """f(c*x)."""
        c = as_rat(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def reverse(self) -> "Poly":
        return Poly(reversed(self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    # -- gcd and content ----------------------------------------------------
    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def content(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in self.coeffs))
        den = reduce(lcm, (c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer polynomial with coprime coefficients and positive leading term."""
        if self.is_zero():
            return self
        p = self / self.content()
        return -p if p.lc < 0 else p

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return [c.numerator for c in self.coeffs]

    def squarefree_part(self) -> "Poly":
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic()

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    # -- resultants ------------------------------------------------------------
    def resultant(self, other: "Poly") -> Fraction:
        """Res(self, other) = lc(self)^deg(other) * prod other(roots of self)."""
        f, g = self, self._coerce(other)
        if f.is_zero() or g.is_zero():
            return Fraction(0)
        sign = 1
        acc = Fraction(1)
        while True:
            m, n = f.degree, g.degree
            if n == 0:
                return sign * acc * g.lc**m
            if m == 0:
                return sign * acc * f.lc**n
            r = f % g
            if r.is_zero():
                return Fraction(0)
            if (m * n) % 2:
                sign = -sign
            acc *= g.lc ** (m - r.degree)
            f, g = g, r

    def discriminant(self) -> Fraction:
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * self.resultant(self.derivative()) / self.lc

    # -- real roots -----------------------------------------------------------
    def sturm_sequence(self) -> list["Poly"]:
        seq = [self, self.derivative()]
        while not seq[-1].is_zero():
            r = seq[-2] % seq[-1]
            seq.append(-r)
        return seq[:-1]

    def cauchy_bound(self) -> Fraction:
        """Every complex root has absolute value strictly below this."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(self.lc)
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lc

    def rational_roots(self) -> list[Fraction]:
        if self.is_zero():
            raise ValueError("zero polynomial")
        p = self.primitive()
        roots = []
        k = 0
        while p[k] == 0:
            k += 1
        if k:
            roots.append(Fraction(0))
            p = Poly(p.coeffs[k:])
        if p.degree < 1:
            return roots
        a0 = p.coeffs[0].numerator
        an = p.lc.numerator
        for num in divisors(a0):
            for den in divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and p.eval(cand) == 0:
                        roots.append(cand)
        return sorted(roots)

    # -- serialization --------------------------------------------------------
    def to_json_list(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data.replace("−", "-"))
        return cls(as_rat(c) if isinstance(c, str) else as_rat(int(c)) if isinstance(c, int) else c for c in data)


def sturm_count(seq: Sequence[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct roots in the half-open interval (a, b]."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def _sign_changes(seq: Sequence[Poly], x: Fraction) -> int:
    changes = 0
    prev = 0
    for p in seq:
        v = p.eval(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def count_real_roots(f: Poly) -> int:
    seq = f.sturm_sequence()
    bound = f.cauchy_bound()
    return sturm_count(seq, -bound, bound)


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], one per distinct real root, in increasing order.

    Degenerate intervals (a == b) mark exact rational roots.
    """
    if f.degree < 1:
        return []
    sqf = f.squarefree_part()
    seq = sqf.sturm_sequence()
    bound = sqf.cauchy_bound()
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = sturm_count(seq, a, b)
        if k == 0:
            continue
        if k == 1:
            if sqf.eval(b) == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    out.sort()
    return out


def refine_root(f: Poly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (a, b] of a squarefree f below ``width``."""
    if a == b:
        return a, b
    sb = f.eval(b) > 0
    while b - a > width:
        mid = (a + b) / 2
        v = f.eval(mid)
        if v == 0:
            return mid, mid
        if (v > 0) == sb:
            b = mid
        else:
            a = mid
    return a, b


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Lagrange interpolation through exact points (x_i, y_i) with distinct x_i."""
    n = len(points)
    # Newton divided differences
    xs = [as_rat(x) for x, _ in points]
    coef = [as_rat(y) for _, y in points]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = Poly([coef[-1]]) if coef else Poly()
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + coef[i]
    return out

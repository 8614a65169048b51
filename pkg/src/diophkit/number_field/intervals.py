"""Real intervals and complex boxes with exact rational endpoints.

Endpoints are rounded outward to a dyadic grid after each multiplication so
that sizes stay bounded; containment is never lost.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..exact_arith.integers import as_rat, sqrt_lower, sqrt_upper


def _floor_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(math.floor(x * (1 << bits)), 1 << bits)


def _ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(math.ceil(x * (1 << bits)), 1 << bits)


class RealInterval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = as_rat(lo)
        hi = lo if hi is None else as_rat(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x) -> "RealInterval":
        return cls(x, x)

    def rounded(self, bits: int) -> "RealInterval":
        if self.lo.denominator == 1 and self.hi.denominator == 1:
            return self
        return RealInterval(_floor_dyadic(self.lo, bits), _ceil_dyadic(self.hi, bits))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        x = as_rat(x)
        return self.lo <= x <= self.hi

    def sign(self) -> int | None:
        """+1 or -1 when certified, 0 for the exact point zero, None if undecided."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __add__(self, other):
        other = _as_interval(other)
        return RealInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RealInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RealInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def square(self) -> "RealInterval":
        if self.lo >= 0:
            return RealInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RealInterval(self.hi * self.hi, self.lo * self.lo)
        return RealInterval(0, max(self.lo * self.lo, self.hi * self.hi))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RealInterval(0, max(-self.lo, self.hi))

    def intersects(self, other: "RealInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def __repr__(self):
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"


def _as_interval(x) -> RealInterval:
    return x if isinstance(x, RealInterval) else RealInterval.point(x)


class ComplexBox:
    """Axis-aligned rectangle re x im in the complex plane."""

    __slots__ = ("re", "im")

    def __init__(self, re: RealInterval, im: RealInterval | None = None):
        self.re = _as_interval(re)
        self.im = _as_interval(0 if im is None else im)

    @classmethod
    def point(cls, re, im=0) -> "ComplexBox":
        return cls(RealInterval.point(re), RealInterval.point(im))

    @classmethod
    def disk(cls, re, im, rad) -> "ComplexBox":
        re, im, rad = as_rat(re), as_rat(im), as_rat(rad)
        return cls(RealInterval(re - rad, re + rad), RealInterval(im - rad, im + rad))

    def is_real(self) -> bool:
        return self.im.is_point() and self.im.lo == 0

    def rounded(self, bits: int) -> "ComplexBox":
        return ComplexBox(self.re.rounded(bits), self.im.rounded(bits))

    def __add__(self, other):
        other = _as_box(other)
        return ComplexBox(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_box(other))

    def __rsub__(self, other):
        return _as_box(other) - self

    def __mul__(self, other):
        other = _as_box(other)
        if other.is_real():
            return ComplexBox(self.re * other.re, self.im * other.re)
        if self.is_real():
            return ComplexBox(other.re * self.re, other.im * self.re)
        return ComplexBox(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def abs2(self) -> RealInterval:
        return self.re.square() + self.im.square()

    def abs_interval(self, bits: int = 64) -> RealInterval:
        a = self.abs2()
        return RealInterval(sqrt_lower(a.lo, bits), sqrt_upper(a.hi, bits))

    def contains(self, z) -> bool:
        if isinstance(z, complex):
            return self.re.contains(Fraction(z.real)) and self.im.contains(Fraction(z.imag))
        if isinstance(z, tuple):
            return self.re.contains(z[0]) and self.im.contains(z[1])
        return self.re.contains(z) and self.im.contains(0)

    def contains_box(self, other: "ComplexBox") -> bool:
        return (
            self.re.lo <= other.re.lo
            and other.re.hi <= self.re.hi
            and self.im.lo <= other.im.lo
            and other.im.hi <= self.im.hi
        )

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def center(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    def __repr__(self):
        if self.is_real():
            return f"Box({self.re!r})"
        return f"Box({self.re!r} + i{self.im!r})"


def _as_box(x) -> ComplexBox:
    if isinstance(x, ComplexBox):
        return x
    if isinstance(x, RealInterval):
        return ComplexBox(x)
    return ComplexBox.point(x)


def horner_real(coeffs, x: RealInterval, bits: int) -> RealInterval:
    acc = RealInterval.point(0)
    for c in reversed(coeffs):
        acc = (acc * x + c).rounded(bits)
    return acc


def horner_box(coeffs, z: ComplexBox, bits: int) -> ComplexBox:
    acc = ComplexBox.point(0)
    for c in reversed(coeffs):
        acc = (acc * z + c).rounded(bits)
    return acc

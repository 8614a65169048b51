"""Number fields Q[x]/(f) in the power basis of a root of f."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property

from ..errors import DegreeCapExceeded, NotIrreducible
from ..exact_arith.integers import as_rat, rat_to_str
from ..exact_arith.poly import Poly, count_real_roots
from .intervals import ComplexBox, RealInterval, horner_box, horner_real
from .irreducible import is_irreducible_over_Q
from .roots import RootEnclosures, enclose_roots

DEFAULT_DEGREE_CAP = 24


def newton_power_sums(f: Poly, count: int) -> list[Fraction]:
    """p_k = sum of k-th powers of the roots of monic f, for k < count."""
    n = f.degree
    # f = x^n + a_{n-1} x^{n-1} + ... + a_0 ; e-coefficients c_i = a_{n-i}
    c = [f[n - i] for i in range(n + 1)]
    p = [Fraction(n)]
    for k in range(1, count):
        s = Fraction(0)
        for i in range(1, min(k, n + 1)):
            s += c[i] * p[k - i]
        if k <= n:
            s += k * c[k]
        p.append(-s)
    return p


def charpoly_from_power_sums(p: list[Fraction], n: int) -> Poly:
    """Monic degree-n polynomial whose roots have power sums p[1..n]."""
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += (-1) ** (i - 1) * e[k - i] * p[i]
        e.append(s / k)
    return Poly([(-1) ** (n - i) * e[n - i] for i in range(n + 1)])


class NumberField:
    """Q[x]/(f) for monic irreducible integral f."""

    def __init__(self, poly, *, check: bool = True, degree_cap: int = DEFAULT_DEGREE_CAP, name: str | None = None):
        f = poly if isinstance(poly, Poly) else Poly.from_json(poly)
        if f.degree < 1:
            raise NotIrreducible("defining polynomial must have degree at least 1")
        if not f.is_monic() or not f.is_integral():
            raise ValueError(f"defining polynomial {f} must be monic with integer coefficients")
        if f.degree > degree_cap:
            raise DegreeCapExceeded(f"degree {f.degree} exceeds cap {degree_cap}")
        if check and not is_irreducible_over_Q(f):
            raise NotIrreducible(f"{f} is reducible over Q")
        self.poly = f
        self.degree = f.degree
        self.degree_cap = degree_cap
        self.name = name or f"Q[x]/({f})"

    # -- constructors -----------------------------------------------------
    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(Poly([0, 1]), check=False, name="Q")

    @classmethod
    def quadratic(cls, d: int) -> "NumberField":
        return cls(Poly([-d, 0, 1]), name=f"Q(sqrt({d}))")

    @classmethod
    def cyclotomic(cls, m: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> "NumberField":
        from ..cyclotomic import cyclotomic_poly

        # irreducibility of cyclotomic polynomials is classical; skip the test
        return cls(cyclotomic_poly(m), check=False, degree_cap=degree_cap, name=f"Q(zeta_{m})")

    # -- invariants -------------------------------------------------------
    @cached_property
    def disc(self) -> int:
        d = self.poly.discriminant() if self.degree > 1 else Fraction(1)
        return int(d)

    @property
    def discriminant_of_poly(self) -> int:
        return self.disc

    @cached_property
    def signature(self) -> tuple[int, int]:
        r = count_real_roots(self.poly)
        return r, (self.degree - r) // 2

    def is_totally_real(self) -> bool:
        return self.signature[1] == 0

    def is_rationals(self) -> bool:
        return self.degree == 1

    @cached_property
    def power_sums(self) -> list[Fraction]:
        return newton_power_sums(self.poly, self.degree)

    def roots(self, bits: int = 64) -> RootEnclosures:
        if self.degree == 1:
            r = -self.poly[0]
            return RootEnclosures((RealInterval.point(r),), (), bits)
        return enclose_roots(self.poly, bits)

    # -- elements ----------------------------------------------------------
    def element(self, coords) -> "NFElement":
        if isinstance(coords, (int, Fraction, str)):
            coords = [coords]
        cs = [as_rat(c) for c in coords]
        if len(cs) > self.degree:
            return self.from_poly(Poly(cs))
        return NFElement(self, cs + [Fraction(0)] * (self.degree - len(cs)))

    def __call__(self, coords) -> "NFElement":
        return self.element(coords)

    def from_poly(self, p: Poly) -> "NFElement":
        r = p % self.poly if p.degree >= self.degree else p
        return NFElement(self, [r[i] for i in range(self.degree)])

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self.element([-self.poly[0]])
        return self.element([0, 1])

    def one(self) -> "NFElement":
        return self.element([1])

    def zero(self) -> "NFElement":
        return self.element([0])

    # -- protocol ------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(("NumberField", self.poly))

    def __repr__(self):
        return f"NumberField({self.poly})"

    def to_dict(self) -> dict:
        return {"poly": self.poly.to_json_list(), "signature": list(self.signature), "disc": str(self.disc)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "NumberField":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            return cls(Poly.from_json(data))
        field = cls(Poly.from_json(data["poly"]))
        if "signature" in data and tuple(data["signature"]) != field.signature:
            raise ValueError("stored signature does not match the defining polynomial")
        if "disc" in data and int(str(data["disc"]).replace("−", "-")) != field.disc:
            raise ValueError("stored discriminant does not match the defining polynomial")
        return field

    from_json = from_dict


class NFElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(as_rat(c) for c in coords)
        if len(self.coords) != field.degree:
            raise ValueError("coordinate vector length must equal the field degree")

    @property
    def poly(self) -> Poly:
        return Poly(self.coords)

    def _coerce(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.element([as_rat(other)])

    def __add__(self, other):
        o = self._coerce(other)
        return NFElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return NFElement(self.field, [a * c for a in self.coords])
        o = self._coerce(other)
        return self.field.from_poly(self.poly * o.poly)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: s*a + t*f = 1
        r0, r1 = self.field.poly, self.poly
        s0, s1 = Poly(), Poly([1])
        while r1.degree > 0:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():
            raise ZeroDivisionError("element shares a factor with the modulus")
        return self.field.from_poly(s1 / r1.lc)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return NFElement(self.field, [a / c for a in self.coords])
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return isinstance(other, NFElement) and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"NFElement({self.poly}; {self.field.poly})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    # -- norm, trace, characteristic polynomial -------------------------
    def norm(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return self.field.poly.resultant(self.poly)

    def trace(self) -> Fraction:
        ps = self.field.power_sums
        return sum((c * ps[i] for i, c in enumerate(self.coords)), Fraction(0))

    def charpoly(self) -> Poly:
        n = self.field.degree
        p = [Fraction(n)]
        power = self.field.one()
        for _ in range(n):
            power = power * self
            p.append(power.trace())
        return charpoly_from_power_sums(p, n)

    def minpoly(self) -> Poly:
        return self.charpoly().squarefree_part()

    def is_integral(self) -> bool:
        return self.charpoly().is_integral()

    def denominator(self) -> int:
        from math import lcm

        out = 1
        for c in self.coords:
            out = lcm(out, c.denominator)
        return out

    # -- embeddings ------------------------------------------------------
    def embeddings(self, bits: int = 64) -> list[ComplexBox]:
        """Certified boxes for sigma(x), one per root of f, real roots first."""
        if self.is_rational():
            c = self.coords[0]
            return [ComplexBox.point(c) for _ in range(self.field.degree)]
        enc = self.field.roots(bits)
        cs = list(self.coords)
        out = [ComplexBox(horner_real(cs, iv, bits + 16)) for iv in enc.real]
        out += [horner_box(cs, box, bits + 16) for box in enc.nonreal]
        return out

    def real_embeddings(self, bits: int = 64) -> list[RealInterval]:
        r = self.field.signature[0]
        return [b.re for b in self.embeddings(bits)[:r]]

    def to_json_list(self) -> list[str]:
        return [rat_to_str(c) for c in self.coords]


def embeddings(x: NFElement, precision_bits: int) -> list[ComplexBox]:
    if precision_bits < 32:
        raise ValueError("precision_bits must be at least 32")
    return x.embeddings(precision_bits)


def nf_norm_trace(x: NFElement) -> tuple[Fraction, Fraction]:
    return x.norm(), x.trace()

"""Factored representation of nonzero rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .integers import as_rat, factorint


class DivisorMap(Mapping):
    """Immutable prime -> exponent map with an optional sign.

    Zero exponents are dropped.  Multiplication adds exponents, so huge values
    such as q**(3q) * (q**6 - 1) never need to be expanded.
    """

    __slots__ = ("_exps", "sign")

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = (), sign: int = 1):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[int, int] = {}
        for p, e in items:
            acc[p] = acc.get(p, 0) + e
        object.__setattr__(self, "_exps", {p: e for p, e in sorted(acc.items()) if e})
        object.__setattr__(self, "sign", -1 if sign < 0 else 1)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorMap is immutable")

    @classmethod
    def of(cls, x) -> "DivisorMap":
        x = as_rat(x)
        if x == 0:
            raise ValueError("zero has no factored form")
        exps = dict(factorint(x.numerator)) if abs(x.numerator) > 1 else {}
        if x.denominator > 1:
            for p, e in factorint(x.denominator).items():
                exps[p] = exps.get(p, 0) - e
        return cls(exps, -1 if x < 0 else 1)

    def __getitem__(self, p):
        return self._exps.get(p, 0)

    def __iter__(self):
        return iter(self._exps)

    def __len__(self):
        return len(self._exps)

    def __contains__(self, p):
        return p in self._exps

    def __eq__(self, other):
        if isinstance(other, DivisorMap):
            return self._exps == other._exps and self.sign == other.sign
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self._exps.items()), self.sign))

    def __mul__(self, other: "DivisorMap") -> "DivisorMap":
        merged = dict(self._exps)
        for p, e in other._exps.items():
            merged[p] = merged.get(p, 0) + e
        return DivisorMap(merged, self.sign * other.sign)

    def __truediv__(self, other: "DivisorMap") -> "DivisorMap":
        return self * other.inverse()

    def __pow__(self, k: int) -> "DivisorMap":
        return DivisorMap({p: e * k for p, e in self._exps.items()}, self.sign**k if k >= 0 else self.sign ** (-k))

    def inverse(self) -> "DivisorMap":
        return DivisorMap({p: -e for p, e in self._exps.items()}, self.sign)

    def valuation(self, p: int) -> int:
        return self._exps.get(p, 0)

    def is_integral(self) -> bool:
        return all(e >= 0 for e in self._exps.values())

    def bit_size(self) -> int:
        return sum(abs(e) * p.bit_length() for p, e in self._exps.items())

    def value(self, budget_bits: int = 1 << 20) -> Fraction:
        if self.bit_size() > budget_bits:
            raise OverflowError(f"expansion needs about {self.bit_size()} bits, budget is {budget_bits}")
        num = den = 1
        for p, e in self._exps.items():
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(self.sign * num, den)

    def to_json(self) -> dict:
        return {"sign": self.sign, "factors": [[str(p), e] for p, e in self._exps.items()]}

    def __repr__(self):
        body = " * ".join(f"{p}^{e}" if e != 1 else str(p) for p, e in self._exps.items()) or "1"
        return f"DivisorMap({'-' if self.sign < 0 else ''}{body})"

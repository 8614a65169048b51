"""Sparse multivariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..exact_arith.integers import as_rat, rat_to_str

Monomial = tuple  # sorted tuple of (var, exp) with exp >= 1


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms = {m: as_rat(c) for m, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------
    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MPoly":
        return cls({((name, exp),): Fraction(1)}) if exp else cls.const(1)

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(): as_rat(c)})

    @classmethod
    def coerce(cls, x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, str):
            return cls.var(x)
        return cls.const(x)

    # -- queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree_in(self, v: str) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def coefficients_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = MPoly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other):
        return MPoly.coerce(other) - self

    def __mul__(self, other):
        other = MPoly.coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rat(c)
        return MPoly({m: v / c for m, v in self.terms.items()})

    def __pow__(self, e: int):
        out = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and evaluation ------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "MPoly":
        """Replace variables by polynomials or constants."""
        out = MPoly()
        cache: dict = {}
        for m, c in self.terms.items():
            term = MPoly.const(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = MPoly.coerce(mapping[v]) ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * MPoly({tuple(rest): 1})
            out = out + term
        return out

    def eval(self, values: Mapping[str, object]):
        """Evaluate at a full assignment; values may be ints, Fractions or field elements."""
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total = total + t
        return total

    def coefficient_of(self, v: str) -> dict[int, "MPoly"]:
        """Collect by powers of v."""
        out: dict[int, MPoly] = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.pop(v, 0)
            out.setdefault(e, MPoly())
            out[e] = out[e] + MPoly({tuple(sorted(d.items())): c})
        return out

    # -- serialization -------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0]))

    def to_json(self) -> list:
        return [[rat_to_str(c), [[v, e] for v, e in m]] for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "MPoly":
        out = {}
        for coef, mono in data:
            m = tuple(sorted((str(v), int(e)) for v, e in mono))
            out[m] = out.get(m, 0) + as_rat(coef if isinstance(coef, str) else int(coef))
        return cls(out)

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(rat_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def var(name: str) -> MPoly:
    return MPoly.var(name)


def const(c) -> MPoly:
    return MPoly.const(c)

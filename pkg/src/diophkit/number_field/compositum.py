"""Composita and relative extensions built from resultants."""
from __future__ import annotations

from fractions import Fraction

from ..errors import DegreeCapExceeded, NotIrreducible
from ..exact_arith.poly import Poly, interpolate
from .field import DEFAULT_DEGREE_CAP, NFElement, NumberField
from .irreducible import factor_over_Q, is_irreducible_over_Q


def combination_sequence(limit: int = 40):
    """(1,1), (1,2), (2,1), (1,3), (3,1), (2,3), (3,2), ... skipping non-coprime pairs."""
    from math import gcd

    yield (1, 1)
    for total in range(3, limit):
        for a in range(1, total):
            b = total - a
            if gcd(a, b) == 1:
                yield (a, b)


def _shifted(g: Poly, a: int, b: int, x0: Fraction) -> Poly:
    """b^m * g((x0 - a*y)/b) as a polynomial in y."""
    m = g.degree
    inner = Poly([Fraction(x0, 1) / b, Fraction(-a, b)])
    return g.compose(inner) * Fraction(b) ** m


def combination_minpoly(f: Poly, g: Poly, a: int, b: int) -> Poly:
    """prod_{i,j} (x - a*alpha_i - b*beta_j) for monic f, g."""
    n, m = f.degree, g.degree
    pts = []
    for t in range(n * m + 1):
        x0 = Fraction(t)
        pts.append((x0, f.resultant(_shifted(g, a, b, x0))))
    return interpolate(pts)


def compositum(K1: NumberField, K2: NumberField, *, expected_degree: int | None = None,
               degree_cap: int = DEFAULT_DEGREE_CAP) -> tuple[NumberField, tuple[int, int]]:
    """A field generated by a*alpha + b*beta, plus the (a, b) that worked."""
    n, m = K1.degree, K2.degree
    if n == 1:
        return K2, (0, 1)
    if m == 1:
        return K1, (1, 0)
    target = expected_degree or n * m
    if target > degree_cap:
        raise DegreeCapExceeded(f"compositum degree {target} exceeds cap {degree_cap}")
    for a, b in combination_sequence():
        h = combination_minpoly(K1.poly, K2.poly, a, b)
        if not h.is_squarefree():
            continue
        if h.degree == target and is_irreducible_over_Q(h):
            return NumberField(h, check=False, degree_cap=degree_cap), (a, b)
        if expected_degree is not None and expected_degree < h.degree:
            for fac, _ in factor_over_Q(h):
                if fac.degree == expected_degree:
                    return NumberField(fac, check=False, degree_cap=degree_cap), (a, b)
        if expected_degree is None:
            raise NotIrreducible(
                f"fields are not linearly disjoint; pass expected_degree (h has degree {h.degree})"
            )
    raise NotIrreducible("no primitive combination found")


# -- polynomials with number-field coefficients -----------------------------

def _trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def fp_mod(a: list, b: list) -> list:
    a = list(a)
    inv = b[-1].inverse()
    while len(a) >= len(b):
        c = a[-1] * inv
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] = a[shift + j] - c * y
        a.pop()
        _trim(a)
    return a


def fp_resultant(f: list, g: list, one: NFElement) -> NFElement:
    """Resultant over a number field of two polynomials given as coefficient lists."""
    f, g = _trim(list(f)), _trim(list(g))
    if not f or not g:
        return one * 0
    acc = one
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return acc * g[0] ** m
        if m == 0:
            return acc * f[0] ** n
        r = fp_mod(f, g)
        if not r:
            return one * 0
        if (m * n) % 2:
            acc = -acc
        acc = acc * g[-1] ** (m - (len(r) - 1))
        f, g = g, r


class RelativeExtension:
    """top = base[y]/(g(y)) with g monic and irreducible over base.

    Elements are lists of base elements [c_0, ..., c_{k-1}] meaning sum c_j y^j.
    """

    def __init__(self, base: NumberField, rel_poly: list[NFElement]):
        if not rel_poly[-1] == base.one():
            raise ValueError("relative defining polynomial must be monic")
        self.base = base
        self.rel_poly = [base.element(c.coords if isinstance(c, NFElement) else [c]) for c in rel_poly]
        self.degree = len(rel_poly) - 1

    @classmethod
    def over_Q(cls, top: NumberField) -> "RelativeExtension":
        Q = NumberField.rationals()
        return cls(Q, [Q.element([c]) for c in top.poly.coeffs])

    def relative_norm(self, coords: list[NFElement]) -> NFElement:
        return fp_resultant(self.rel_poly, list(coords), self.base.one())

    def absolute_poly(self) -> Poly:
        """Monic polynomial over Q of y: N_{base/Q} of g, written in y."""
        n = self.base.degree
        k = self.degree
        pts = []
        for t in range(n * k + 1):
            val = Fraction(0)
            # g(t) as an element of base, then its absolute norm
            acc = self.base.zero()
            for c in reversed(self.rel_poly):
                acc = acc * t + c
            val = acc.norm()
            pts.append((Fraction(t), val))
        return interpolate(pts)

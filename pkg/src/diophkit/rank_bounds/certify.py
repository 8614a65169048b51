"""Certified comparisons of |sigma(x)| against rationals, with exact tie breaking."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import PrecisionExhausted
from ..exact_arith.poly import Poly, interpolate, sturm_count
from ..number_field.field import NFElement
from ..number_field.intervals import RealInterval

START_BITS = 64
MAX_BITS = 4096


def conjugate_index(field, i: int) -> int:
    """Index of the complex-conjugate embedding (real embeddings are their own)."""
    r = len(field.roots(START_BITS).real)
    if i < r:
        return i
    j = i - r
    return r + (j ^ 1)


@lru_cache(maxsize=256)
def _pair_product_poly(coeffs: tuple) -> Poly:
    """Monic polynomial whose roots are all products a_i a_j of the roots of c."""
    c = Poly(coeffs)
    n = c.degree
    pts = []
    for x0 in range(n * n + 1):
        # Y^n c(x0 / Y) has roots x0 / a_j
        rev = Poly([c[k] * Fraction(x0) ** k for k in range(n, -1, -1)])
        if rev.is_zero():
            res = Fraction(0)
        else:
            res = c.resultant(rev)
        pts.append((Fraction(x0), res))
    return interpolate(pts).monic()


def _abs2_interval(elem: NFElement, i: int, bits: int) -> RealInterval:
    box = elem.embeddings(bits)[i]
    return box.abs2()


def compare_abs2(elem: NFElement, i: int, c) -> int:
    """Sign of |sigma_i(elem)|^2 - c, decided exactly.

    Intervals are refined until the sign is certain; a possible equality is
    settled algebraically (real embedding: elem^2 - c is zero in the field;
    non-real: c is the unique root in range of the pair-product polynomial).
    """
    c = Fraction(c)
    field = elem.field
    real = i < len(field.roots(START_BITS).real)
    if real:
        u = elem * elem - c
        if u.is_zero():
            return 0
    tie_poly = None
    bits = START_BITS
    while bits <= MAX_BITS:
        iv = _abs2_interval(elem, i, bits) - c
        s = iv.sign()
        if s is not None and s != 0:
            return s
        if s == 0:
            return 0
        if not real:
            if tie_poly is None:
                cp = elem.charpoly()
                tie_poly = (_pair_product_poly(tuple(cp.coeffs)), None)
                sq = tie_poly[0].squarefree_part()
                tie_poly = (tie_poly[0], sq)
            full, sq = tie_poly
            if full(c) == 0:
                lo, hi = iv.lo + c, iv.hi + c
                if sturm_count(sq.sturm_sequence(), lo - Fraction(1, 1 << bits), hi) == 1:
                    return 0
        bits *= 2
    raise PrecisionExhausted("comparison undecided at the precision limit")


def compare_abs(elem: NFElement, i: int, c) -> int:
    """Sign of |sigma_i(elem)| - c for c >= 0."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("c must be nonnegative")
    return compare_abs2(elem, i, c * c)


def all_abs_greater(elem: NFElement, c) -> bool:
    return all(compare_abs(elem, i, c) > 0 for i in range(elem.field.degree))

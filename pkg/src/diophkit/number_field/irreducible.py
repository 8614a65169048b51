"""Irreducibility of integer polynomials over Q."""
from __future__ import annotations

from ..exact_arith.ffpoly import FFPoly, factor_poly_mod_p
from ..exact_arith.integers import primes_up_to
from ..exact_arith.poly import Poly

_PATTERN_PRIMES = primes_up_to(400)


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def is_irreducible_over_Q(f: Poly, max_primes: int = 40) -> bool:
    """Decide irreducibility of a nonconstant rational polynomial.

    Mod-p factor patterns give a fast certificate in the common case: a factor
    of degree k over Q forces k to be a sum of mod-p factor degrees for every
    good prime.  When the patterns cannot rule out all proper degrees the
    question is handed to sympy's factorization over Z.
    """
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    g = f.primitive()
    if not g.is_squarefree():
        return False
    if g.rational_roots():
        return False
    n = g.degree
    possible = set(range(1, n))
    disc = g.discriminant()
    lc = g.lc.numerator
    tried = 0
    for p in _PATTERN_PRIMES:
        if lc % p == 0 or disc.numerator % p == 0:
            continue
        fac = factor_poly_mod_p(FFPoly.from_poly(g, p))
        degs = [h.degree for h, e in fac for _ in range(e)]
        possible &= _subset_sums(degs)
        if not possible:
            return True
        tried += 1
        if tried >= max_primes:
            break
    import sympy

    x = sympy.Symbol("x")
    expr = sum(int(c) * x**i for i, c in enumerate(g.int_coeffs()))
    return bool(sympy.Poly(expr, x).is_irreducible)


def factor_over_Q(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities (sympy backed)."""
    import sympy

    x = sympy.Symbol("x")
    g = f.primitive()
    expr = sum(int(c) * x**i for i, c in enumerate(g.int_coeffs()))
    _, facs = sympy.factor_list(expr, x)
    out = []
    for h, e in facs:
        cs = sympy.Poly(h, x).all_coeffs()[::-1]
        out.append((Poly([int(c) for c in cs]).monic(), int(e)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out

from .divisor import DivisorMap
from .ffpoly import FFPoly, factor_poly_mod_p
from .hensel import hensel_lift
from .integers import (
    INF,
    PlusInfinity,
    Rat,
    as_rat,
    crt,
    divisors,
    euler_phi,
    factorint,
    int_valuation,
    is_prime,
    mult_order,
    padic_valuation,
    primes_up_to,
    rat_to_str,
)
from .poly import Poly, count_real_roots, interpolate, isolate_real_roots, refine_root, sturm_count

__all__ = [
    "DivisorMap",
    "FFPoly",
    "INF",
    "PlusInfinity",
    "Poly",
    "Rat",
    "as_rat",
    "count_real_roots",
    "crt",
    "divisors",
    "euler_phi",
    "factor_poly_mod_p",
    "factorint",
    "hensel_lift",
    "int_valuation",
    "interpolate",
    "is_prime",
    "isolate_real_roots",
    "mult_order",
    "padic_valuation",
    "primes_up_to",
    "rat_to_str",
    "refine_root",
    "sturm_count",
]

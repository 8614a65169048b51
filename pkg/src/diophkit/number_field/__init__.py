from .compositum import RelativeExtension, combination_minpoly, compositum
from .field import DEFAULT_DEGREE_CAP, NFElement, NumberField, embeddings, nf_norm_trace
from .intervals import ComplexBox, RealInterval
from .irreducible import factor_over_Q, is_irreducible_over_Q
from .roots import enclose_roots, max_abs_root_bound
from .splitting import Inconclusive, PrimeAbove, SplitType, primes_above, split_prime, valuations_at

__all__ = [
    "ComplexBox",
    "DEFAULT_DEGREE_CAP",
    "Inconclusive",
    "NFElement",
    "NumberField",
    "PrimeAbove",
    "RealInterval",
    "RelativeExtension",
    "SplitType",
    "combination_minpoly",
    "compositum",
    "embeddings",
    "enclose_roots",
    "factor_over_Q",
    "is_irreducible_over_Q",
    "max_abs_root_bound",
    "nf_norm_trace",
    "primes_above",
    "split_prime",
    "valuations_at",
]

"""Cyclic subfields of Q(zeta_ell): modulus searches, Frobenius tests, Gauss periods."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ._accel import kernels
from .errors import BadDivisibility, DegreeCapExceeded, SearchLimitExceeded, Unsupported
from .exact_arith.integers import is_prime, primes_up_to, require_prime
from .exact_arith.poly import Poly
from .number_field.compositum import compositum
from .number_field.field import DEFAULT_DEGREE_CAP, NumberField
from .number_field.splitting import Inconclusive, split_prime

log = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 10**6


def primitive_root(ell: int) -> int:
    require_prime(ell, "ell")
    if ell == 2:
        return 1
    from .exact_arith.integers import factorint

    qs = list(factorint(ell - 1))
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // q, ell) != 1 for q in qs):
            return g
    raise ArithmeticError("no primitive root")


@dataclass(frozen=True)
class CyclicSubfieldDesc:
    ell: int
    t: int
    generator: int
    # H = <g^t>, the index-t subgroup; cosets are g^i H for i in 0..t-1
    period_poly: Poly | None = None

    def subgroup(self) -> list[int]:
        h = pow(self.generator, self.t, self.ell)
        out, cur = [], 1
        for _ in range((self.ell - 1) // self.t):
            out.append(cur)
            cur = cur * h % self.ell
        return sorted(out)


def frobenius_power_test(ell: int, t: int, p: int) -> bool:
    """True iff p is a t-th power residue mod ell, i.e. p splits in the degree-t subfield."""
    require_prime(ell, "ell")
    if (ell - 1) % t:
        raise BadDivisibility(f"{t} does not divide {ell} - 1")
    if p % ell == 0:
        raise ValueError("p must differ from ell")
    return pow(p, (ell - 1) // t, ell) == 1


def _candidates(t: int, avoid, primes, limit: int):
    avoid = set(avoid)
    bad = set(primes)
    for ell in primes_up_to(limit):
        if ell % t != 1 or ell in avoid or ell in bad:
            continue
        yield ell


def find_split_modulus(primes, t: int, avoid=(), limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    if t < 2:
        raise ValueError("t must be at least 2")
    primes = list(primes)
    for ell in _candidates(t, avoid, primes, limit):
        if all(kernels.power_residue_flags(primes, ell, t)):
            return ell
    raise SearchLimitExceeded(f"no split modulus below {limit}")


def find_inert_modulus(primes, t: int, avoid=(), limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    if not is_prime(t):
        raise Unsupported("inert construction requires prime degree")
    primes = list(primes)
    for ell in _candidates(t, avoid, primes, limit):
        if not any(kernels.power_residue_flags(primes, ell, t)):
            return ell
    raise SearchLimitExceeded(f"no inert modulus below {limit}")


def residue_certificate(primes, ell: int, t: int) -> dict[str, int]:
    e = (ell - 1) // t
    return {str(p): pow(p, e, ell) for p in primes}


def _gauss_period_minpoly(ell: int, t: int, g: int) -> Poly:
    """prod over cosets of (X - eta_i), computed in Z[x]/(x^ell - 1)."""
    k = (ell - 1) // t
    h = pow(g, t, ell)
    periods = []
    for i in range(t):
        vec = [0] * ell
        base = pow(g, i, ell)
        cur = base
        for _ in range(k):
            vec[cur] += 1
            cur = cur * h % ell
        periods.append(vec)

    def mul(a, b):
        out = [0] * ell
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[(i + j) % ell] += x * y
        return out

    # polynomial in X with coefficients in Z[x]/(x^ell - 1), ascending
    acc = [[1] + [0] * (ell - 1)]
    for eta in periods:
        neg = [-c for c in eta]
        nxt = [[0] * ell for _ in range(len(acc) + 1)]
        for d, coeff in enumerate(acc):
            # coeff * (X - eta)
            for j in range(ell):
                nxt[d + 1][j] += coeff[j]
            prod = mul(coeff, neg)
            for j in range(ell):
                nxt[d][j] += prod[j]
        acc = nxt
    out = []
    for coeff in acc:
        # an element of Z[x]/(x^ell - 1) lying in Z has a_1 = ... = a_{ell-1}; value a_0 - a_1
        if any(c != coeff[1] for c in coeff[1:]):
            raise ArithmeticError("period polynomial coefficient is not rational")
        out.append(coeff[0] - coeff[1])
    return Poly(out)


def gauss_period_desc(ell: int, t: int) -> CyclicSubfieldDesc:
    require_prime(ell, "ell")
    if (ell - 1) % t:
        raise BadDivisibility(f"{t} does not divide {ell} - 1")
    g = primitive_root(ell)
    return CyclicSubfieldDesc(ell, t, g, _gauss_period_minpoly(ell, t, g))


def gauss_period_field(ell: int, t: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> NumberField:
    if t > degree_cap:
        raise DegreeCapExceeded(f"degree {t} exceeds cap {degree_cap}")
    desc = gauss_period_desc(ell, t)
    return NumberField(desc.period_poly, degree_cap=degree_cap, name=f"period field ({ell}, {t})")


def sieve_witness_primes(K: NumberField, inert_in, limit: int) -> list[int]:
    """Primes p <= limit splitting completely in K and of residue degree [F_i:Q] above every factor in K*F_i."""
    inert_in = list(inert_in)
    if limit < 2:
        return []
    composita = []
    for F in inert_in:
        L, _ = compositum(K, F, expected_degree=K.degree * F.degree)
        composita.append((F, L))
    in_play = [K] + inert_in + [L for _, L in composita]
    out = []
    for p in primes_up_to(limit):
        if any(M.disc % p == 0 for M in in_play):
            continue
        st = split_prime(K, p)
        if st is Inconclusive or not st.is_totally_split():
            continue
        ok = True
        for F, L in composita:
            sl = split_prime(L, p)
            if sl is Inconclusive:
                log.info("skipping p=%d: decomposition in %s inconclusive", p, L)
                ok = False
                break
            if any(f != F.degree or e != 1 for e, f in sl.entries):
                ok = False
                break
        if ok:
            out.append(p)
    return out

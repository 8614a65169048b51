"""Hensel lifting of a squarefree factorization mod p to mod p**k."""
from __future__ import annotations

from .ffpoly import FFPoly, _divmod as _ff_divmod, _gcd as _ff_gcd, _mul as _ff_mul, _sub as _ff_sub


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % m for c in out])


def _sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def divmod_monic(a, b, m):
    """Division by a monic polynomial over Z/m."""
    rem = [c % m for c in a]
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        quot[i - db] = c
        if c:
            for j, y in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * y) % m
    return _trim(quot), _trim(rem[:db])


def _ext_gcd_mod_p(g, h, p):
    """s, t over F_p with s*g + t*h == 1 for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _ff_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _ff_sub(s0, _ff_mul(q, s1, p), p)
        t0, t1 = t1, _ff_sub(t0, _ff_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _lift_pair(f, g, h, p, k):
    """Lift f == g*h (mod p), g monic, to mod p**k.  f monic integer list."""
    s, t = _ext_gcd_mod_p(g, h, p)
    mod = p
    for _ in range(1, k):
        nxt = mod * p
        err = _sub(f, _mul(g, h, nxt), nxt)
        e = [(c // mod) % p for c in err]
        e = _trim(e)
        # a*h + b*g == e (mod p) with deg a < deg g
        _, a = _ff_divmod(_ff_mul(e, t, p), g, p)
        rest = _ff_sub(e, _ff_mul(a, h, p), p)
        b, r = _ff_divmod(rest, g, p)
        if r:
            raise ArithmeticError("Hensel step failed")
        g = _add(g, [c * mod for c in a], nxt)
        h = _add(h, [c * mod for c in b], nxt)
        mod = nxt
    return g, h


def hensel_lift(f_int: list[int], factors: list[FFPoly], k: int) -> list[list[int]]:
    """Lift monic pairwise-coprime factors of monic f mod p to factors mod p**k.

    Returns integer coefficient lists reduced into [0, p**k).
    """
    if not factors:
        return []
    p = factors[0].p
    m = p**k
    f = [c % m for c in f_int]
    if len(factors) == 1:
        return [_trim(f)]
    g = list(factors[0].coeffs)
    rest = [1]
    for fac in factors[1:]:
        rest = _ff_mul(rest, list(fac.coeffs), p)
    if len(_ff_gcd(g, rest, p)) != 1:
        raise ValueError("factors are not coprime mod p")
    G, H = _lift_pair(f, g, rest, p, k)
    return [G] + hensel_lift(H, factors[1:], k)

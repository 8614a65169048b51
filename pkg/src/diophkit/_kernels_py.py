"""Pure-Python versions of the hot loops in ``_kernels.pyx``.

Both modules expose the same functions with the same return values; the
package picks one at import time (see ``_accel``).
"""


def _val(v, q):
    k = 0
    while v % q == 0:
        v //= q
        k += 1
    return k


def order_lift_scan(q, x, n, r, smax, modulus, corollary):
    """Compare ord_q(x^s - 1) with the lifted closed form for s = 1..smax.

    ``modulus`` is q**K with K chosen so products fit in 64 bits.  Values of s
    where x^s == 1 mod q**K are returned in ``overflow`` so the caller can
    settle them with exact big integers.  Returns
    (mismatches, first_bad_s, corollary_failures, overflow).
    """
    mismatches = 0
    first_bad = 0
    cor_fail = 0
    overflow = []
    xm = x % modulus
    acc = 1
    for s in range(1, smax + 1):
        acc = acc * xm % modulus
        d = (acc - 1) % modulus
        if s % n:
            closed = 0
        else:
            closed = r + _val(s // n, q)
        if d == 0:
            overflow.append(s)
            continue
        direct = _val(d, q)
        if direct != closed:
            mismatches += 1
            if not first_bad:
                first_bad = s
        if corollary:
            # ord >= r + l  <=>  n * q^l divides s, checked until both sides fail
            step = n
            l = 0
            while True:
                lhs = direct >= r + l
                rhs = s % step == 0
                if lhs != rhs:
                    cor_fail += 1
                    break
                if not lhs:
                    break
                step *= q
                l += 1
    return mismatches, first_bad, cor_fail, overflow


def direct_valuations(q, x, smax, modulus):
    """ord_q(x^s - 1) mod q**K for s = 1..smax; -1 marks a value >= K."""
    out = []
    xm = x % modulus
    acc = 1
    for _ in range(smax):
        acc = acc * xm % modulus
        d = (acc - 1) % modulus
        out.append(-1 if d == 0 else _val(d, q))
    return out


def power_residue_flags(bases, ell, t):
    """For each base b: 1 if b^((ell-1)/t) == 1 mod ell else 0."""
    e = (ell - 1) // t
    return [1 if pow(b % ell, e, ell) == 1 else 0 for b in bases]

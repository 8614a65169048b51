# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_kernels_py`` for the reference semantics."""

from libc.stdint cimport uint64_t, int64_t


cdef inline int _val(uint64_t v, uint64_t q) nogil:
    cdef int k = 0
    while v % q == 0:
        v //= q
        k += 1
    return k


cdef inline int _val_int(int64_t v, int64_t q) nogil:
    cdef int k = 0
    while v % q == 0:
        v //= q
        k += 1
    return k


def order_lift_scan(long q, long x, long n, long r, long smax, unsigned long long modulus, bint corollary):
    cdef uint64_t m = modulus
    cdef uint64_t qq = q
    cdef uint64_t xm = (<uint64_t>x) % m
    cdef uint64_t acc = 1
    cdef uint64_t d
    cdef long s, closed, direct, l
    cdef int64_t step
    cdef long mismatches = 0
    cdef long first_bad = 0
    cdef long cor_fail = 0
    cdef bint lhs, rhs
    overflow = []
    for s in range(1, smax + 1):
        acc = (acc * xm) % m
        d = (acc + m - 1) % m
        if s % n:
            closed = 0
        else:
            closed = r + _val_int(s // n, q)
        if d == 0:
            overflow.append(s)
            continue
        direct = _val(d, qq)
        if direct != closed:
            mismatches += 1
            if first_bad == 0:
                first_bad = s
        if corollary:
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


def direct_valuations(long q, long x, long smax, unsigned long long modulus):
    cdef uint64_t m = modulus
    cdef uint64_t xm = (<uint64_t>x) % m
    cdef uint64_t acc = 1
    cdef uint64_t d
    cdef long i
    out = [0] * smax
    for i in range(smax):
        acc = (acc * xm) % m
        d = (acc + m - 1) % m
        out[i] = -1 if d == 0 else _val(d, <uint64_t>q)
    return out


def power_residue_flags(bases, long ell, long t):
    cdef uint64_t e = (ell - 1) // t
    cdef uint64_t m = ell
    cdef uint64_t b, acc, ex
    out = []
    for base in bases:
        b = (<uint64_t>(base % ell))
        acc = 1
        ex = e
        while ex:
            if ex & 1:
                acc = (acc * b) % m
            b = (b * b) % m
            ex >>= 1
        out.append(1 if acc == 1 else 0)
    return out

"""Certified isolation of all complex roots of a squarefree rational polynomial.

Real roots come from exact Sturm bisection.  Non-real roots start from
floating approximations (mpmath) and are certified with Weierstrass disks:
for monic f of degree n and distinct centers z_i, the disks
D(z_i, n |f(z_i) / prod_{j != i} (z_i - z_j)|) cover the roots and, when
pairwise disjoint, each contains exactly one.  Centers of conjugate pairs are
chosen as exact conjugates, so a disk that avoids the real axis holds a
non-real root, and the Sturm count of real roots must match.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from ..errors import PrecisionExhausted
from ..exact_arith.integers import sqrt_upper
from ..exact_arith.poly import Poly, isolate_real_roots, refine_root
from .intervals import ComplexBox, RealInterval

MAX_BITS = 4096


@dataclass(frozen=True)
class RootEnclosures:
    """Real roots first (increasing), then non-real roots as conjugate pairs

    ordered by increasing real part, positive imaginary part first.
    """

    real: tuple[RealInterval, ...]
    nonreal: tuple[ComplexBox, ...]
    bits: int

    def boxes(self) -> list[ComplexBox]:
        return [ComplexBox(iv) for iv in self.real] + list(self.nonreal)

    @property
    def signature(self) -> tuple[int, int]:
        return len(self.real), len(self.nonreal) // 2


def _to_frac(x, bits: int) -> Fraction:
    return Fraction(int(mpmath.nint(mpmath.mpf(x) * (1 << bits))), 1 << bits)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _ceval(coeffs, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _cmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def _nonreal_approx(f: Poly, bits: int, n_real: int) -> list[tuple[Fraction, Fraction]]:
    dps = max(20, int(bits * 0.302) + 10)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200 + 4 * bits, extraprec=2 * bits)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise PrecisionExhausted(f"root approximation did not converge at {bits} bits") from exc
        roots = sorted(roots, key=lambda z: abs(mpmath.im(z)))
        cands = [z for z in roots[n_real:] if mpmath.im(z) > 0]
        if len(cands) * 2 != f.degree - n_real:
            return []
        cands.sort(key=lambda z: (mpmath.re(z), mpmath.im(z)))
        # convert while the working precision is still in effect
        return [(_to_frac(mpmath.re(z), bits), _to_frac(mpmath.im(z), bits)) for z in cands]


def _certify(f: Poly, real_mids: list[Fraction], pairs: list[tuple[Fraction, Fraction]], bits: int):
    """Weierstrass radii for all centers; None if the disks are not separated."""
    centers = [(m, Fraction(0)) for m in real_mids]
    for re, im in pairs:
        centers.append((re, im))
        centers.append((re, -im))
    n = f.degree
    g = f.monic().coeffs
    radii = []
    for i, zi in enumerate(centers):
        num = _ceval(g, zi)
        den = (Fraction(1), Fraction(0))
        for j, zj in enumerate(centers):
            if j != i:
                den = _cmul(den, (zi[0] - zj[0], zi[1] - zj[1]))
        den_abs2 = den[0] ** 2 + den[1] ** 2
        if den_abs2 == 0:
            return None
        w2 = (num[0] ** 2 + num[1] ** 2) / den_abs2
        radii.append(n * sqrt_upper(w2, bits + 8))
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            d2 = (centers[i][0] - centers[j][0]) ** 2 + (centers[i][1] - centers[j][1]) ** 2
            if (radii[i] + radii[j]) ** 2 >= d2:
                return None
    k = len(real_mids)
    for idx in range(len(pairs)):
        r = radii[k + 2 * idx]
        if r >= pairs[idx][1]:
            return None
    return radii


@lru_cache(maxsize=512)
def _enclose_cached(coeffs: tuple, bits: int) -> RootEnclosures:
    f = Poly(coeffs)
    width = Fraction(1, 1 << bits)
    real_ivs = []
    for a, b in isolate_real_roots(f):
        lo, hi = refine_root(f, a, b, width)
        real_ivs.append(RealInterval(lo, hi))
    n_real = len(real_ivs)
    if n_real == f.degree:
        return RootEnclosures(tuple(real_ivs), (), bits)
    work = max(bits, 53)
    while work <= MAX_BITS:
        pairs = _nonreal_approx(f, work, n_real)
        if pairs:
            mids = [iv.mid if iv.width else iv.lo for iv in real_ivs]
            radii = _certify(f, mids, pairs, work)
            if radii is not None and all(r <= width for r in radii[n_real:]):
                boxes = []
                for idx, (re, im) in enumerate(pairs):
                    r = radii[n_real + 2 * idx]
                    boxes.append(ComplexBox.disk(re, im, r))
                    boxes.append(ComplexBox.disk(re, -im, r))
                return RootEnclosures(tuple(real_ivs), tuple(boxes), bits)
        work *= 2
    raise PrecisionExhausted(f"could not separate the roots of {f} below {MAX_BITS} bits")


def enclose_roots(f: Poly, bits: int = 64) -> RootEnclosures:
    """Certified enclosures of every root of a squarefree f to width 2**-bits."""
    if not f.is_squarefree():
        raise ValueError("root enclosure requires a squarefree polynomial")
    return _enclose_cached(f.coeffs, bits)


def max_abs_root_bound(f: Poly, bits: int = 64) -> Fraction:
    """A rational upper bound for max |root|, certified from the enclosures."""
    enc = enclose_roots(f.squarefree_part(), bits)
    best = Fraction(0)
    for box in enc.boxes():
        best = max(best, box.abs_interval(bits).hi)
    return best


def float_roots(f: Poly) -> list[complex]:
    enc = enclose_roots(f.squarefree_part(), 60)
    return [b.center() for b in enc.boxes()]


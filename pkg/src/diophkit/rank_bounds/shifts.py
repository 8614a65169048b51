"""Linear independence of shifted copies F(T + l_i) of a polynomial."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import TooManyShifts
from ..exact_arith.integers import as_rat
from ..exact_arith.poly import Poly, interpolate, isolate_real_roots


def matrix_rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def determinant(rows) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


@dataclass(frozen=True)
class ShiftFamily:
    base_poly: Poly
    shifts: tuple = field(default=())

    def __post_init__(self):
        sh = tuple(as_rat(s) for s in self.shifts)
        if len(set(sh)) != len(sh):
            raise ValueError("shifts must be distinct")
        object.__setattr__(self, "shifts", sh)
        if self.base_poly.degree < 1:
            raise ValueError("the polynomial must have degree at least 1")

    @property
    def n(self) -> int:
        return self.base_poly.degree

    def with_shift(self, l) -> "ShiftFamily":
        return ShiftFamily(self.base_poly, self.shifts + (as_rat(l),))

    def row(self, l) -> list[Fraction]:
        c = list(self.base_poly.shift(l).coeffs)
        return c + [Fraction(0)] * (self.n + 1 - len(c))

    def coefficient_rows(self) -> list[list[Fraction]]:
        return [self.row(l) for l in self.shifts]

    def evaluation_rows(self, points=None) -> list[list[Fraction]]:
        """Values of each F(T + l) at n + 1 distinct points.

        A polynomial of degree <= n is determined by n + 1 values, so this
        matrix has the same rank as the coefficient matrix.
        """
        pts = points or [Fraction(j) for j in range(self.n + 1)]
        return [[self.base_poly(p + l) for p in pts] for l in self.shifts]


def _check_size(family: ShiftFamily):
    if len(family.shifts) > family.n + 1:
        raise TooManyShifts(f"{len(family.shifts)} shifts exceed the dimension {family.n + 1}")


def shift_independence(family: ShiftFamily) -> bool:
    """Independence by exact rank of the coefficient matrix."""
    _check_size(family)
    return matrix_rank(family.coefficient_rows()) == len(family.shifts)


def shift_independence_by_values(family: ShiftFamily) -> bool:
    """Independence by exact rank of the matrix of values at n + 1 points."""
    _check_size(family)
    return matrix_rank(family.evaluation_rows()) == len(family.shifts)


def shift_determinant(family: ShiftFamily) -> Poly:
    """det (square case) or Gram determinant of the family extended by F(T + l), as a polynomial in l.

    The extended family is independent exactly at the l where this is nonzero.
    """
    k = len(family.shifts) + 1
    n = family.n
    if k > n + 1:
        raise TooManyShifts(f"adding a shift would give {k} polynomials in a space of dimension {n + 1}")
    square = k == n + 1
    deg_bound = n if square else 2 * n
    pts = []
    for j in range(deg_bound + 1):
        l = Fraction(j)
        rows = family.coefficient_rows() + [family.row(l)]
        if square:
            pts.append((l, determinant(rows)))
        else:
            gram = [[sum(a * b for a, b in zip(r1, r2)) for r2 in rows] for r1 in rows]
            pts.append((l, determinant(gram)))
    return interpolate(pts)


def next_shift(family: ShiftFamily) -> Fraction:
    """A constant C such that F(T + l) extends the family independently for every l >= C.

    C is 1 plus an upper bound for the largest real root of the determinant
    polynomial in l, or 0 when that polynomial has no real root.
    """
    if not shift_independence(family):
        raise ValueError("the family itself is dependent")
    det = shift_determinant(family)
    if det.is_zero():
        raise TooManyShifts("no shift keeps the family independent")
    if det.degree == 0:
        return Fraction(0)
    f = det.squarefree_part()
    roots = isolate_real_roots(f)
    if not roots:
        return Fraction(0)
    a, b = roots[-1]
    exact = [r for r in f.rational_roots() if a <= r <= b]
    return 1 + (max(exact) if exact else b)

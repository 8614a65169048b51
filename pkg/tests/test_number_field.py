from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diophkit.errors import DegreeCapExceeded, NotIrreducible, Unsupported
from diophkit.exact_arith import Poly
from diophkit.number_field import (
    ComplexBox,
    NumberField,
    RealInterval,
    SplitType,
    combination_minpoly,
    compositum,
    enclose_roots,
    factor_over_Q,
    is_irreducible_over_Q,
    max_abs_root_bound,
    primes_above,
    split_prime,
    valuations_at,
)

X = sympy.Symbol("X")
FIELDS = [
    Poly([-2, 0, 1]),
    Poly([1, 0, 1]),
    Poly([-1, -3, 0, 1]),
    Poly([-2, 0, 0, 1]),
    Poly([1, 1, 1, 1, 1]),
    Poly([-1, -2, 1, 1]),
]
coords = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), min_size=1, max_size=4)


def numeric_roots(f: Poly):
    with mpmath.workdps(60):
        return mpmath.polyroots([int(c) for c in reversed(f.int_coeffs())], maxsteps=400, extraprec=400)


def _exact(x):
    sign, man, exp, _ = x._mpf_
    return (-1) ** sign * Fraction(int(man)) * Fraction(2) ** exp


def _near(iv, x, slack=Fraction(1, 10**40)):
    return iv.lo - slack <= x <= iv.hi + slack


def as_exact_complex(z):
    if isinstance(z, mpmath.mpf):
        return _exact(z), Fraction(0)
    return _exact(z.real), _exact(z.imag)


@pytest.mark.parametrize("f", FIELDS, ids=str)
def test_root_boxes_contain_numeric_roots(f):
    enc = enclose_roots(f, 80)
    boxes = enc.boxes()
    assert len(boxes) == f.degree
    for z in numeric_roots(f):
        re, im = as_exact_complex(z)
        # the 60-digit reference is accurate far beyond this slack, which is far below the box widths
        assert any(_near(b.re, re) and _near(b.im, im) for b in boxes)
    r, s = enc.signature
    assert r + 2 * s == f.degree
    bound = max_abs_root_bound(f)
    assert all(abs(complex(z)) <= float(bound) + 1e-9 for z in numeric_roots(f))


@pytest.mark.parametrize("f,sig", [(FIELDS[0], (2, 0)), (FIELDS[1], (0, 1)), (FIELDS[2], (3, 0)),
                                   (FIELDS[3], (1, 1)), (FIELDS[4], (0, 2))], ids=str)
def test_signatures(f, sig):
    assert NumberField(f).signature == sig


@pytest.mark.parametrize("f", FIELDS, ids=str)
@settings(max_examples=25, deadline=None)
@given(a=coords, b=coords)
def test_field_arithmetic_and_norm(f, a, b):
    K = NumberField(f)
    x, y = K.element(a[: K.degree]), K.element(b[: K.degree])
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x + y).trace() == x.trace() + y.trace()
    if not x.is_zero():
        assert x * x.inverse() == K.one()
        roots = numeric_roots(f)
        num = mpmath.fprod([sum(mpmath.mpf(c.numerator) / c.denominator * r**i for i, c in enumerate(x.coords))
                            for r in roots])
        assert abs(complex(num) - float(x.norm())) < 1e-6 * max(1, abs(float(x.norm())))


def test_charpoly_and_minpoly():
    K = NumberField(Poly([-2, 0, 1]))
    x = K.element([1, 1])
    assert x.minpoly() == Poly([-1, -2, 1])
    assert K.element([3]).minpoly() == Poly([-3, 1])


def test_reducible_polynomials_rejected():
    with pytest.raises(NotIrreducible):
        NumberField(Poly([-4, 0, 1]))
    with pytest.raises(ValueError):
        NumberField(Poly([1, 0, 2]))
    with pytest.raises(DegreeCapExceeded):
        NumberField(Poly([1] + [0] * 9 + [1]), degree_cap=8)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
@settings(max_examples=80, deadline=None)
def test_irreducibility_matches_sympy(cs):
    f = Poly(cs + [1])
    assert is_irreducible_over_Q(f) == sympy.Poly(list(reversed(f.int_coeffs())), X).is_irreducible


def test_factor_over_Q_products():
    f = Poly([-2, 0, 1]) * Poly([1, 1, 1]) ** 2
    facs = factor_over_Q(f)
    prod = Poly([1])
    for g, e in facs:
        prod = prod * g**e
    assert prod == f
    assert sorted(e for _, e in facs) == [1, 2]


@pytest.mark.parametrize("f", FIELDS, ids=str)
@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 29])
def test_split_prime_matches_factorization(f, p):
    K = NumberField(f)
    st_ = split_prime(K, p)
    if K.disc % p:
        ref = sympy.factor_list(sympy.Poly(list(reversed(f.int_coeffs())), X), modulus=p)[1]
        expected = sorted((1, int(sympy.degree(h, X))) for h, _ in ref)
        assert list(st_.entries) == expected
    assert isinstance(st_, SplitType) and st_.degree == f.degree


def test_split_prime_ramified_quadratic():
    assert split_prime(NumberField.quadratic(2), 2).entries == ((2, 1),)
    assert split_prime(NumberField.quadratic(-1), 2).entries == ((2, 1),)
    assert split_prime(NumberField.quadratic(-1), 5).is_totally_split()
    assert split_prime(NumberField.quadratic(-1), 3).is_inert()


def test_valuations_at_split_prime():
    K = NumberField.quadratic(-1)
    x = K.element([2, 1])
    assert sorted(valuations_at(x, 5)) == [0, 1]
    assert valuations_at(K.element([Fraction(1, 25)]), 5) == [-2, -2]
    assert len(primes_above(K, 5)) == 2
    with pytest.raises(Unsupported):
        primes_above(K, 2)


def test_compositum_of_quadratics():
    L, (a, b) = compositum(NumberField.quadratic(2), NumberField.quadratic(3))
    assert L.degree == 4
    s2, s3 = sympy.sqrt(2), sympy.sqrt(3)
    ref = sympy.minimal_polynomial(a * s2 + b * s3, X)
    assert sympy.Poly(ref, X).all_coeffs() == list(reversed(L.poly.int_coeffs()))


def test_compositum_not_disjoint():
    with pytest.raises(NotIrreducible):
        compositum(NumberField.quadratic(2), NumberField.quadratic(8))
    L, _ = compositum(NumberField.quadratic(2), NumberField.quadratic(2), expected_degree=2)
    assert L.degree == 2


def test_combination_minpoly_roots():
    h = combination_minpoly(Poly([-2, 0, 1]), Poly([1, 0, 1]), 1, 1)
    assert h == Poly([9, 0, -2, 0, 1])


def test_interval_arithmetic_encloses():
    a = RealInterval(Fraction(1), Fraction(2))
    b = RealInterval(Fraction(-3), Fraction(1, 2))
    prod = a * b
    for x in (1, Fraction(3, 2), 2):
        for y in (-3, 0, Fraction(1, 2)):
            assert prod.contains(Fraction(x) * y)
    assert (a - a).contains(0)
    z = ComplexBox.point(Fraction(1), Fraction(2))
    assert z.abs2().contains(5)

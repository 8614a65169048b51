import itertools
import random
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diophkit.errors import (
    EmptySignature,
    ExplosionGuard,
    HypothesesNotMet,
    HypothesisViolated,
    PreconditionFailed,
    RationalAngle,
    TooManyShifts,
)
from diophkit.exact_arith import Poly
from diophkit.number_field import NumberField
from diophkit.number_field.compositum import RelativeExtension
from diophkit.rank_bounds.certify import all_abs_greater, compare_abs, compare_abs2, conjugate_index
from diophkit.rank_bounds.lemmas import (
    ONE_Y,
    TWO_Y,
    bound_two_check,
    denominator_divisibility_check,
    escape_index,
    escape_terms,
    increasing_beyond,
    salem_test_unit,
    threshold_A,
    threshold_B,
    unit_power_approx,
)
from diophkit.rank_bounds.norms import norm_one_brute_search
from diophkit.rank_bounds.ranks import Signature, check_rank_inequality, dirichlet_rank, rank_grid
from diophkit.rank_bounds.shifts import (
    ShiftFamily,
    determinant,
    matrix_rank,
    next_shift,
    shift_determinant,
    shift_independence,
)
from diophkit.suites import bound_two_samples, denominator_instances

K2 = NumberField.quadratic(2)
KI = NumberField.quadratic(-1)


def numeric_abs(elem, i):
    with mpmath.workdps(50):
        box = elem.embeddings(200)[i]
        return mpmath.sqrt(mpmath.mpf(box.abs2().mid.numerator) / box.abs2().mid.denominator)


# -- ranks ---------------------------------------------------------------------------


def test_rank_values_small_case():
    rep = check_rank_inequality(0, 1, 3)
    assert (rep.rank_A_GM, rep.rank_A_GMH, rep.rank_A_E2GM, rep.rank_A_E2M) == (5, 4, 3, 3)
    assert rep.passed


def test_rank_grid_all_pass():
    cases = list(rank_grid(8))
    assert len(cases) == 3 * sum(range(1, 9))
    assert all(check_rank_inequality(*c).passed for c in cases)


def test_rank_errors_and_dirichlet():
    assert dirichlet_rank(Signature(2, 1)) == 2
    with pytest.raises(EmptySignature):
        dirichlet_rank(Signature(0, 0))
    with pytest.raises(HypothesisViolated):
        check_rank_inequality(2, 0, 3)
    with pytest.raises(ValueError):
        check_rank_inequality(1, 1, 3)
    with pytest.raises(ValueError):
        check_rank_inequality(0, 1, 9)


# -- certified comparisons -------------------------------------------------------------


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=2), st.fractions(0, 20, max_denominator=7))
@settings(max_examples=80, deadline=None)
def test_compare_abs_against_high_precision(coords, c):
    for K in (K2, KI):
        x = K.element(coords)
        for i in range(2):
            s = compare_abs(x, i, c)
            ref = numeric_abs(x, i) - mpmath.mpf(c.numerator) / c.denominator
            if abs(ref) > 1e-30:
                assert s == (1 if ref > 0 else -1)


def test_compare_abs_exact_ties():
    assert compare_abs2(KI.element([1, 1]), 0, 2) == 0
    assert compare_abs2(K2.gen(), 0, 2) == 0
    assert compare_abs(K2.element([3, 2]) * K2.element([3, -2]), 1, 1) == 0
    assert conjugate_index(KI, 0) == 1 and conjugate_index(K2, 1) == 1
    assert all_abs_greater(K2.element([5, 1]), 3)
    with pytest.raises(ValueError):
        compare_abs(K2.gen(), 0, -1)


# -- bounds ----------------------------------------------------------------------------


def test_bound_two_samples_hold():
    for K, x, z in bound_two_samples(random.Random(7), 60):
        cert = bound_two_check(K, x, z)
        assert cert.holds
        assert cert.norm_y1 == x.coords[1] ** 2
        assert cert.bound == abs(z.norm() * x.norm())


def test_bound_two_preconditions_reported():
    with pytest.raises(PreconditionFailed):
        bound_two_check(K2, K2.element([0, Fraction(1, 3)]), K2.element([10]))
    with pytest.raises(PreconditionFailed):
        bound_two_check(K2, K2.element([9, 1]), K2.element([2]))


def test_denominator_instances_integral():
    insts = denominator_instances()
    assert len(insts) == 20
    seen = set()
    for K, x, z, variant, U in insts:
        rep = denominator_divisibility_check(K, x, z, variant, U)
        assert rep.integral and rep.value.denominator == 1
        # recompute the quantity from first principles
        y1 = x.coords[1]
        n2 = Fraction(-8) * y1 * y1
        Y = abs(x.norm()).denominator
        factor = Y if variant == ONE_Y else Y * Y
        assert rep.value == factor * n2 / (z * z)
        seen.add((variant, rep.branch))
    assert {v for v, _ in seen} == {ONE_Y, TWO_Y}
    assert "y1 = 0" in {b for _, b in seen}


def test_denominator_hypotheses_rejected():
    with pytest.raises(HypothesesNotMet):
        # 7 splits in Q(sqrt 2), so it is not an admissible OneY denominator
        denominator_divisibility_check(K2, K2.element([Fraction(3, 7), Fraction(1, 7)]), 1, ONE_Y, (7,))
    with pytest.raises(HypothesesNotMet):
        denominator_divisibility_check(K2, K2.element([Fraction(1, 3)]), 1, TWO_Y, ())
    with pytest.raises(HypothesesNotMet):
        denominator_divisibility_check(K2, K2.element([3, 1]), 3, TWO_Y, ())


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(1, 4), st.integers(-3, 6))
@settings(max_examples=60, deadline=None)
def test_threshold_A_property(cs, lc, k):
    Q = Poly(cs + [lc])
    A = threshold_A(Q, k)
    for step in (Fraction(1, 1000), Fraction(1, 3), 1, 7, 100):
        assert Q(A + step) > k
    assert threshold_B(Q) == threshold_A(Q, 2) + 1


def test_threshold_A_values():
    A = threshold_A(Poly([0, 0, 1]), 2)
    assert A * A >= 2 and A - Fraction(1, 1024) < sympy.sqrt(2)
    assert threshold_A(Poly([-2, 0, 1]), 2) == 2
    assert increasing_beyond(Poly([0, -3, 0, 1])) >= 1


@pytest.mark.parametrize("coords", [[0, 0], [1, 1], [-30, 7], [100, -40], [Fraction(1, 3), 2]])
def test_escape_index_is_least(coords):
    K = NumberField.quadratic(5)
    P = Poly([-1, -2, 1, 1])
    x = K.element(coords)
    k = escape_index(x, P, 3, 1, 3)
    terms = dict(escape_terms(x, P, 3, 1, 3))
    for j in range(k):
        assert not all(numeric_abs(terms[j], i) > 2 for i in range(2))
    assert all(numeric_abs(terms[k], i) > 2 for i in range(2))


def test_escape_index_preconditions():
    K = NumberField.quadratic(5)
    with pytest.raises(PreconditionFailed):
        escape_index(K.one(), Poly([-100, 1]), 3, 1, 5)
    with pytest.raises(PreconditionFailed):
        escape_index(K.one(), Poly([0, 1]), 3, 1, 2)


def test_unit_power_approx_salem():
    L = salem_test_unit(4)
    u = L.gen()
    assert u.norm() == 1
    circle = [i for i in range(4) if compare_abs(u, i, 1) == 0]
    assert len(circle) == 2
    lam = Fraction(1, 2)
    for k in (1, 2, 3):
        r = unit_power_approx(u, k, lam)
        z = complex(u.embeddings(128)[circle[0]].center())
        assert abs(z**r - 1) < float(lam) / 2**k
        assert all(abs(z**s - 1) >= float(lam) / 2**k - 1e-12 for s in range(1, r))


def test_unit_power_approx_errors():
    with pytest.raises(RationalAngle):
        unit_power_approx(KI.gen(), 2, Fraction(1, 2))
    with pytest.raises(PreconditionFailed):
        unit_power_approx(K2.element([1, 1]), 2, Fraction(1, 2))
    with pytest.raises(ValueError):
        unit_power_approx(salem_test_unit(4).gen(), 2, 2)


# -- norm-one search -------------------------------------------------------------------


def test_norm_one_absolute():
    Q = NumberField.rationals()
    got = {tuple(x.coords) for x in norm_one_brute_search(Q, K2, 3)}
    assert got == {(a, b) for a in range(-3, 4) for b in range(-3, 4) if a * a - 2 * b * b == 1} - {(1, 0), (-1, 0)}
    got = {tuple(x.coords) for x in norm_one_brute_search(Q, KI, 2)}
    assert got == {(0, 1), (0, -1)}
    with pytest.raises(ExplosionGuard):
        norm_one_brute_search(Q, K2, 2000, budget=100)


def test_norm_one_relative():
    top = RelativeExtension(K2, [K2.one(), K2.zero(), K2.one()])
    got = norm_one_brute_search(K2, top, 1)
    one = K2.one()
    for a, b in got:
        assert a * a + b * b == one
    expected = 0
    for flat in itertools.product(range(-1, 2), repeat=4):
        a, b = K2.element(list(flat[:2])), K2.element(list(flat[2:]))
        if a * a + b * b == one and not (b.is_zero() and (a == one or a == -one)):
            expected += 1
    assert len(got) == expected and expected > 0


# -- shifts ----------------------------------------------------------------------------


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_matrix_rank_and_det_against_sympy(rows):
    assert matrix_rank(rows) == sympy.Matrix(rows).rank()
    if len(rows) == 4:
        assert determinant(rows) == sympy.Matrix(rows).det()


@pytest.mark.parametrize("d", range(1, 7))
def test_monomial_shifts_independent(d):
    F = Poly([0] * d + [1])
    rng = random.Random(d)
    for _ in range(40):
        size = rng.randint(1, d + 1)
        fam = ShiftFamily(F, tuple(rng.sample(range(10), size)))
        assert shift_independence(fam)
    with pytest.raises(TooManyShifts):
        shift_independence(ShiftFamily(F, tuple(range(d + 2))))


def test_next_shift_certificate():
    fam = ShiftFamily(Poly([0, 0, 1]), (0, 1))
    det = shift_determinant(fam)
    # rows: coefficients of T^2, (T + 1)^2, (T + l)^2; the determinant is +-2l(l - 1)
    ref = [sympy.Matrix([[0, 0, 1], [1, 2, 1], [j * j, 2 * j, 1]]).det() for j in range(-3, 6)]
    got = [det(j) for j in range(-3, 6)]
    assert got == ref or got == [-v for v in ref]
    assert {abs(v) for v in got} == {abs(2 * j * (j - 1)) for j in range(-3, 6)}
    C = next_shift(fam)
    assert C == 2
    for j in range(int(C), int(C) + 20):
        assert shift_independence(fam.with_shift(j))


def test_next_shift_dependent_family():
    F = Poly([1, 1])
    with pytest.raises(TooManyShifts):
        next_shift(ShiftFamily(F, (0, 1)))

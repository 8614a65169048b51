import dataclasses
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diophkit.errors import BadPrime, InconsistentChain, NotIrreducibleAtResidue, ReducibleRadical
from diophkit.exact_arith import DivisorMap, Poly, int_valuation, padic_valuation
from diophkit.number_field import NumberField, split_prime
from diophkit.witness_kit import (
    BOUNDARY,
    NEGATIVE_DIVISIBLE,
    NEGATIVE_NOT_DIVISIBLE,
    NO_SOLUTION,
    NON_NEGATIVE,
    UNKNOWN,
    FactoredInt,
    WitnessParams,
    assemble_I_family,
    build_params,
    check_params,
    direct_h_valuation,
    h_valuation_profile,
    necessity_check,
    norm_form_eval,
    norm_form_poly,
    radical_irreducible_mod_p,
    ramification_profile,
    sample_ord_x_sweep,
)

P327 = build_params(3, 2, 7)

factor_st = st.tuples(st.integers(2, 12), st.integers(1, 12), st.integers(0, 1))


# -- FactoredInt --------------------------------------------------------------------------


@given(st.lists(factor_st, min_size=1, max_size=4), st.sampled_from([2, 3, 5, 7, 11]))
def test_factored_int_valuation_matches_expansion(factors, p):
    f = FactoredInt(tuple(factors))
    n = f.as_int()
    assert f.valuation(p) == int_valuation(p, n)


@given(st.lists(factor_st, min_size=1, max_size=4), st.integers(2, 10**6))
def test_factored_int_mod_bits_and_divisor(factors, m):
    f = FactoredInt(tuple(factors))
    n = f.as_int()
    assert f.mod(m) == n % m
    lo, hi = f.bit_bounds()
    assert 2**lo <= n < 2**hi
    assert f.divisor().value() == n


def test_factored_int_budget_and_validation():
    big = FactoredInt(((3, 10**6, 1),))
    with pytest.raises(OverflowError):
        big.as_int(budget_bits=1000)
    assert big.valuation(3) == 0 and big.valuation(2) == int_valuation(2, 3**2 - 1) + int_valuation(2, 10**6) - 1
    with pytest.raises(ValueError):
        FactoredInt(((1, 3, 0),))


# -- parameters ---------------------------------------------------------------------------


def test_params_for_three_two_seven():
    P = P327
    assert P.s == 10
    assert P.r.factors == ((3, 9, 0), (3, 6, 1), (2, 6, 1))
    assert str(P.r) == "3^9*(3^6 - 1)*(2^6 - 1)"
    assert P.r.as_int() == 3**9 * (3**6 - 1) * (2**6 - 1)
    assert P.g == Fraction(7**10, 61)
    # minimality: no smaller positive m prime to 7 has m = 7^10 mod 2 * 3^3
    mod = 2 * 27
    assert all(m % 7 == 0 or (m - 7**10) % mod for m in range(1, 61))
    assert (61 - 7**10) % mod == 0
    assert check_params(P) == []


@pytest.mark.parametrize("q,b,p,s", [(3, 2, 7, 10), (3, 4, 7, 19), (5, 2, 11, 16), (3, 5, 7, 10), (3, 2, 13, 10)])
def test_params_invariants(q, b, p, s):
    P = build_params(q, b, p)
    assert P.s == s and P.s % q
    assert padic_valuation(p, P.g) == s
    assert P.g.denominator % p
    N = abs(b) * q**3
    assert (P.g - 1).numerator % N == 0
    assert P.r.valuation(q) >= 1
    assert P.r.mod(math.factorial(q)) == P.r.as_int() % math.factorial(q)


def test_params_errors():
    with pytest.raises(ValueError):
        build_params(4, 2, 7)
    with pytest.raises(BadPrime):
        build_params(3, 2, 3)
    with pytest.raises(BadPrime):
        build_params(3, 14, 7)
    with pytest.raises(NotIrreducibleAtResidue):
        build_params(3, 2, 5)
    with pytest.raises(NotIrreducibleAtResidue):
        build_params(3, 1, 7)
    with pytest.raises(ArithmeticError):
        check_params(dataclasses.replace(P327, s=9))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_radical_irreducibility_routes_agree(q):
    from diophkit.exact_arith import FFPoly

    for p in range(3, 200):
        if not all(p % d for d in range(2, int(p**0.5) + 1)) or p == q:
            continue
        for b in range(1, 12):
            if b % p == 0:
                continue
            f = FFPoly([(-b) % p] + [0] * (q - 1) + [1], p)
            assert radical_irreducible_mod_p(q, b, p) == f.is_irreducible()


# -- valuation profile --------------------------------------------------------------------


def test_profile_at_minus_one():
    prof = h_valuation_profile(P327, -1)
    assert prof.branch == NEGATIVE_NOT_DIVISIBLE
    assert prof.ord_h % 3 == 2 and prof.ord_h_mod_q == 2
    assert necessity_check(P327, -1) == NO_SOLUTION


def test_profile_branches():
    assert h_valuation_profile(P327, 0).branch == NEGATIVE_DIVISIBLE
    assert h_valuation_profile(P327, 0).ord_h == -30
    # the g^-q term always has negative order, so large ord_x still lands in a negative branch
    assert h_valuation_profile(P327, 5).ord_h == -30
    # with e = r(s + 1) the two terms tie at ord_x = -(q - 1)s; such e is divisible by q
    E = P327.exponent()
    boundary = h_valuation_profile(P327, -20, ramification=E)
    assert boundary.branch == BOUNDARY and boundary.ord_h is None
    assert not boundary.hypotheses_hold
    assert necessity_check(P327, -20, ramification=E) == UNKNOWN
    assert necessity_check(P327, -1, ramification=3) == UNKNOWN


def test_sweep_never_claims_no_solution():
    sweep = sample_ord_x_sweep(P327, 0, 50)
    assert len(sweep) == 51
    assert all(v != NO_SOLUTION for _, v in sweep)


def _toy_params(q, p, s, r, m):
    """Hand-made parameters small enough to expand h exactly."""
    return WitnessParams(q, Fraction(2), p, DivisorMap.of(2), s, FactoredInt(((r, 1, 0),)), Fraction(p**s, m))


@given(st.sampled_from([(3, 7), (3, 13), (5, 11)]), st.integers(1, 4), st.integers(2, 5), st.integers(1, 30),
       st.integers(-3, 4), st.sampled_from([1, 2, 3, -5, Fraction(3, 2), Fraction(-4, 9)]))
@settings(max_examples=150, deadline=None)
def test_profile_and_direct_route_match_exact_h(qp, s, r, m, k, unit):
    q, p = qp
    if m % p == 0:
        return
    P = _toy_params(q, p, s, r, m)
    x = Fraction(p) ** k * unit
    E = r * (s + 1)
    h = Fraction(q**3 * 2) ** r * (x**E / P.g + P.g ** (-q)) + 1
    exact = padic_valuation(p, h)
    direct = direct_h_valuation(P, x)
    if isinstance(direct, tuple):
        assert exact >= direct[1]
    else:
        assert direct == min(exact, 0) or (direct == 0 and exact >= 0)
    prof = h_valuation_profile(P, k)
    if prof.ord_h is not None:
        assert prof.ord_h == exact
        assert prof.branch in (NEGATIVE_DIVISIBLE, NEGATIVE_NOT_DIVISIBLE)
    elif prof.branch == NON_NEGATIVE:
        assert exact >= 0


def test_direct_route_on_real_params():
    for k in (-2, -1, 0, 1, 3):
        for unit in (1, 3, Fraction(2, 5)):
            x = Fraction(7) ** k * unit
            prof = h_valuation_profile(P327, k)
            if prof.ord_h is not None:
                assert direct_h_valuation(P327, x) == prof.ord_h
    with pytest.raises(ValueError):
        direct_h_valuation(P327, 0)


# -- norm form ----------------------------------------------------------------------------


def _mul_mod_radical(a, c, q, b):
    out = [Fraction(0)] * q
    for i, x in enumerate(a):
        for j, y in enumerate(c):
            k = i + j
            out[k % q] += x * y * (b if k >= q else 1)
    return out


def _numeric_norm(q, b, a):
    with mpmath.workdps(40):
        b = Fraction(b)
        root = mpmath.root(mpmath.mpf(b.numerator) / b.denominator, q)
        prod = mpmath.mpf(1)
        for j in range(q):
            beta = root * mpmath.exp(2j * mpmath.pi * j / q)
            prod *= sum(mpmath.mpf(c.numerator) / c.denominator * beta**i for i, c in enumerate(a))
        return prod


coord_st = st.fractions(-6, 6, max_denominator=4)


@given(st.sampled_from([(3, 2), (3, 5), (5, 3), (3, Fraction(1, 2))]), st.data())
@settings(max_examples=60, deadline=None)
def test_norm_form_routes(qb, data):
    q, b = qb
    a = data.draw(st.lists(coord_st, min_size=q, max_size=q))
    c = data.draw(st.lists(coord_st, min_size=q, max_size=q))
    na, nc = norm_form_eval(q, b, a), norm_form_eval(q, b, c)
    assert norm_form_eval(q, b, _mul_mod_radical(a, c, q, Fraction(b))) == na * nc
    num = _numeric_norm(q, b, a)
    assert abs(complex(num) - float(na)) < 1e-12 * max(1, abs(float(na)))
    names = [f"a{i}" for i in range(q)]
    assert norm_form_poly(q, b, names).eval(dict(zip(names, a))) == na


def test_norm_form_values_and_errors():
    assert str(norm_form_poly(3, 2, "abc")) == "-6*a*b*c + a^3 + 2*b^3 + 4*c^3"
    assert [norm_form_eval(3, 2, v) for v in ([1, 0, 0], [0, 1, 0], [-1, 1, 0])] == [1, 2, 1]
    K = NumberField(Poly([-2, 0, 0, 1]))
    assert norm_form_eval(3, 2, [1, 2, 3]) == K.element([1, 2, 3]).norm()
    with pytest.raises(ReducibleRadical):
        norm_form_eval(3, 8, [1, 0, 0])
    with pytest.raises(ValueError):
        norm_form_eval(3, 2, [1, 0])


# -- ramification and the equation family ---------------------------------------------------


def test_ramification_profile():
    K = NumberField.quadratic(3)
    levels = [split_prime(K, 3), split_prime(K, 7), (3, [(3, 1)]), (9, [(1, 9)])]
    assert ramification_profile(levels, 3) == (1, 2, False)
    assert ramification_profile([(2, [(1, 1), (1, 1)])], 3) == (0, 0, True)
    with pytest.raises(InconsistentChain):
        ramification_profile([(4, [(1, 1), (1, 2)])], 3)


def test_I_family_structure_and_evaluation():
    P13 = build_params(3, 2, 13)
    sysm = assemble_I_family(3, 2, [(7, P327), (13, P13)])
    sysm.validate()
    assert sysm.tags == ["I[p=7]", "I[p=13]"]
    assert sysm.meta["u"] == str(61**3 * P13.g_denominator**3)
    assert sysm.meta["z_default"] == 1
    eq = sysm.equations[0]
    assert eq.degree_in("x") == P327.exponent()
    a = {"a_7_0": 1, "a_7_1": 2, "a_7_2": 0}
    N = norm_form_eval(3, 2, [1, 2, 0])
    vals = {**a, "x": 1, "h1_7": 5, "h0_7": N - 5}
    assert eq.eval(vals) == 0
    vals["h0_7"] += 1
    assert eq.eval(vals) != 0
    empty = assemble_I_family(3, 2, [])
    assert not empty.equations and empty.meta["primes"] == []
    with pytest.raises(ValueError):
        assemble_I_family(3, 2, [(13, P327)])

import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from diophkit.cyclotomic import (
    FallbackDirect,
    TowerSpec,
    analyze,
    cyclic_order_valuation,
    cyclotomic_poly,
    direct_order_valuation,
    factor_count_cyclotomic,
    g_p_bound,
    kw_container,
    order_data,
    residue_degree_cyclotomic,
    tower_levels,
    verify_order_lift_grid,
)
from diophkit.errors import HypothesisViolated, NotCoprime, RamifiedPrime
from diophkit.exact_arith import Poly
from diophkit.number_field import NumberField, split_prime

X = sympy.Symbol("X")


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclotomic_poly_matches_sympy(m):
    ref = sympy.Poly(sympy.cyclotomic_poly(m, X), X).all_coeffs()
    assert list(reversed(cyclotomic_poly(m).int_coeffs())) == ref


def test_sympy_free_multiplicative_identity():
    f = Poly([1])
    for d in (1, 2, 3, 4, 6, 12):
        f = f * cyclotomic_poly(d)
    assert f == Poly.monomial(12) - 1


def _ord(q, n):
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


@pytest.mark.parametrize("q", [3, 5, 7])
def test_order_lift_small_grid_by_big_integers(q):
    for x in range(2, 120):
        if x % q == 0:
            continue
        for s in range(1, 3 * q**2):
            assert cyclic_order_valuation(q, x, s) == _ord(q, x**s - 1)


@given(st.integers(2, 3000).filter(lambda x: x % 4 == 1), st.integers(1, 200))
def test_order_lift_two_adic_closed_form(x, s):
    v = cyclic_order_valuation(2, x, s)
    assert not isinstance(v, FallbackDirect)
    assert v == _ord(2, x**s - 1)


def test_two_adic_fallback_and_strict():
    v = cyclic_order_valuation(2, 3, 2)
    assert isinstance(v, FallbackDirect) and v == 3
    with pytest.raises(HypothesisViolated):
        cyclic_order_valuation(2, 3, 2, strict=True)
    assert cyclic_order_valuation(2, 3, 1) == 1


def test_order_lift_input_errors():
    with pytest.raises(NotCoprime):
        cyclic_order_valuation(3, 6, 2)
    with pytest.raises(ValueError):
        cyclic_order_valuation(4, 3, 2)
    with pytest.raises(ValueError):
        direct_order_valuation(3, 1, 1)


def test_order_lift_grid_reduced_budget():
    rep = verify_order_lift_grid(qmax=5, xmax=200)
    assert rep.passed and rep.checked > 0 and rep.fallback > 0


def test_factor_counts_along_five_tower_for_seven():
    counts = [factor_count_cyclotomic(7, 5**j) for j in range(1, 7)]
    assert counts == [1, 5, 5, 5, 5, 5]
    # the count per level is phi(5^j) / ord_{5^j}(7), independently via sympy
    assert counts == [sympy.totient(5**j) // sympy.n_order(7, 5**j) for j in range(1, 7)]
    bound = g_p_bound(7, TowerSpec((5,)))
    assert bound == 25 and max(counts) <= bound


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_factor_counts_match_dedekind_splitting(p):
    for m in range(3, 41):
        if math.gcd(p, m) != 1:
            continue
        st_ = split_prime(NumberField.cyclotomic(m, degree_cap=40), p)
        assert st_.count == factor_count_cyclotomic(p, m)
        assert set(st_.residue_degrees()) == {residue_degree_cyclotomic(p, m)}


def test_counts_bounded_along_towers():
    for p in (3, 7, 11, 13):
        for base in ((5,), (2,), (3,)):
            if p in base:
                continue
            tower = kw_container(base, two_cap=12)
            bound = g_p_bound(p, tower)
            for m in tower_levels(tower, 6):
                assert factor_count_cyclotomic(p, m) <= bound


def test_order_data_and_errors():
    d = order_data(7, (5,))
    assert d.per_qi == ((4, 2),)
    with pytest.raises(RamifiedPrime):
        g_p_bound(5, TowerSpec((5,)))
    with pytest.raises(ValueError):
        TowerSpec((2, 3))
    with pytest.raises(NotCoprime):
        factor_count_cyclotomic(5, 10)


def test_analyze_report():
    out = analyze(7, 125)
    assert (out["order"], out["factor_count"], out["bound"]) == (20, 5, 25)

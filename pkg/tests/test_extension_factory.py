import cmath

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diophkit.errors import BadDivisibility, DegreeCapExceeded, Unsupported
from diophkit.extension_factory import (
    find_inert_modulus,
    find_split_modulus,
    frobenius_power_test,
    gauss_period_desc,
    gauss_period_field,
    primitive_root,
    residue_certificate,
    sieve_witness_primes,
)
from diophkit.number_field import NumberField, split_prime

PERIOD_CASES = [(7, 3), (13, 3), (31, 3), (11, 5), (13, 4), (17, 2), (29, 7)]


def numeric_period_poly(ell, t):
    g = sympy.primitive_root(ell)
    k = (ell - 1) // t
    h = pow(g, t, ell)
    etas = []
    for i in range(t):
        a = pow(g, i, ell)
        etas.append(sum(cmath.exp(2j * cmath.pi * (a * pow(h, j, ell) % ell) / ell) for j in range(k)))
    coeffs = [1 + 0j]
    for eta in etas:
        coeffs = [0j] + coeffs
        for d in range(len(coeffs) - 1):
            coeffs[d] -= eta * coeffs[d + 1]
    return [round(c.real) for c in coeffs]


@pytest.mark.parametrize("ell,t", PERIOD_CASES)
def test_period_polynomial_matches_numeric_periods(ell, t):
    desc = gauss_period_desc(ell, t)
    assert desc.period_poly.int_coeffs() == numeric_period_poly(ell, t)
    assert len(desc.subgroup()) == (ell - 1) // t


@pytest.mark.parametrize("ell,t", PERIOD_CASES)
def test_period_fields_are_cyclic_and_split_per_power_residues(ell, t):
    K = gauss_period_field(ell, t)
    assert K.degree == t
    if t % 2 == 1 or (ell - 1) // t % 2 == 0:
        assert K.is_totally_real()
    for p in (2, 3, 5, 7, 11, 19, 23, 37, 41, 43):
        if p == ell or K.disc % p == 0:
            continue
        st_ = split_prime(K, p)
        # the decomposition of an unramified prime in a cyclic field is uniform
        assert len(set(st_.residue_degrees())) == 1
        assert st_.is_totally_split() == frobenius_power_test(ell, t, p)


def test_primitive_roots_against_sympy():
    for ell in sympy.primerange(3, 400):
        g = primitive_root(ell)
        assert sympy.n_order(g, ell) == ell - 1
        assert g == sympy.primitive_root(ell)


def test_modulus_searches_for_two_cubed():
    assert find_inert_modulus([2], 3) == 7
    assert find_split_modulus([2], 3) == 31
    K = gauss_period_field(31, 3)
    assert K.signature == (3, 0)
    assert split_prime(K, 5).is_inert()
    assert frobenius_power_test(31, 3, 5) is False


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11]), min_size=1, max_size=3, unique=True),
       st.sampled_from([2, 3, 5]))
@settings(max_examples=30, deadline=None)
def test_modulus_search_certificates(primes, t):
    ell = find_split_modulus(primes, t)
    assert ell % t == 1 and ell not in primes
    assert all(v == 1 for v in residue_certificate(primes, ell, t).values())
    for smaller in sympy.primerange(2, ell):
        if smaller % t == 1 and smaller not in primes:
            assert not all(pow(p, (smaller - 1) // t, smaller) == 1 for p in primes)
    ell = find_inert_modulus(primes, t, avoid=[ell])
    assert all(v != 1 for v in residue_certificate(primes, ell, t).values())


def test_factory_errors():
    with pytest.raises(Unsupported):
        find_inert_modulus([2], 4)
    with pytest.raises(BadDivisibility):
        gauss_period_desc(31, 4)
    with pytest.raises(DegreeCapExceeded):
        gauss_period_field(31, 30, degree_cap=8)
    with pytest.raises(ValueError):
        frobenius_power_test(7, 3, 14)


def test_sieve_witness_primes():
    K = gauss_period_field(7, 3)
    F = NumberField.quadratic(-1)
    ps = sieve_witness_primes(K, [F], 400)
    assert ps
    for p in ps:
        assert frobenius_power_test(7, 3, p)
        assert p % 4 == 3

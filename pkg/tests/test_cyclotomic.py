"""Cyclotomic arithmetic: canonical forms, Galois maps, the square root of 5."""

from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_noether.cyclotomic import (CyclotomicNumber, GaloisMap, cyc_reduce,
                                         cyclotomic_polynomial, eta, euler_phi, galois_apply,
                                         sqrt5_element)

ORDERS = (5, 9)
Z = CyclotomicNumber.zeta


def elements(order):
    q = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(q, min_size=euler_phi(order), max_size=euler_phi(order)).map(
        lambda cs: CyclotomicNumber.from_coeffs(order, cs))


def units(order):
    return st.sampled_from([k for k in range(1, order) if gcd(k, order) == 1])


def as_complex_oracle(order, raw):
    """Evaluate sum raw[i] zeta^i with zeta = exp(2 pi i/order) through sympy."""
    z = sympy.exp(2 * sympy.pi * sympy.I / order)
    return complex(sympy.N(sum(sympy.Rational(c) * z ** i for i, c in enumerate(raw)), 30))


# -- reduction ---------------------------------------------------------------

def test_zeta_to_the_order_is_one():
    assert cyc_reduce(9, [0] * 9 + [1]) == CyclotomicNumber.rational(9, 1)


def test_sum_of_primitive_fifth_roots():
    assert cyc_reduce(5, [0, 1, 1, 1, 1]) == CyclotomicNumber.rational(5, -1)


def test_ninth_roots_reduce_by_phi9():
    # Phi_9 = T^6 + T^3 + 1, checked independently by sympy
    T = sympy.Symbol("T")
    assert sympy.Poly(sympy.cyclotomic_poly(9, T), T).all_coeffs()[::-1] == \
        list(cyclotomic_polynomial(9))
    assert cyc_reduce(9, [0, 0, 0, 1, 0, 0, 1]) == CyclotomicNumber.rational(9, -1)


@pytest.mark.parametrize("order", ORDERS)
def test_cyclotomic_polynomial_matches_sympy(order):
    T = sympy.Symbol("T")
    assert tuple(sympy.Poly(sympy.cyclotomic_poly(order, T), T).all_coeffs()[::-1]) == \
        cyclotomic_polynomial(order)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-9, 9), min_size=1, max_size=2 * n))))
def test_reduction_preserves_the_complex_value(case):
    order, raw = case
    z = cyc_reduce(order, raw)
    assert abs(complex(z) - as_complex_oracle(order, raw)) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(lambda n: elements(n)))
def test_reduction_is_idempotent_and_canonical(a):
    again = cyc_reduce(a.order, list(a.coeffs))
    assert again == a and again.coeffs == a.coeffs
    assert CyclotomicNumber.parse(str(a)) == a


# -- arithmetic --------------------------------------------------------------

def test_zeta5_times_zeta5_fourth():
    assert Z(5) * Z(5, 4) == 1


def test_eta_squared():
    e = eta(9)
    assert e * e == Z(9, 2) + 2 + Z(9, -2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_field_operations(pair):
    a, b = pair
    assert a / 1 == a
    assert (a + b) - b == a
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-6 * (1 + abs(complex(a * b)))


# -- Galois action -----------------------------------------------------------

def test_galois_on_zeta9():
    assert galois_apply(GaloisMap(2, 9), Z(9)) == Z(9, 2)


@settings(max_examples=30, deadline=None)
@given(elements(9))
def test_galois_identity_and_order_six(z):
    assert galois_apply(GaloisMap(1, 9), z) == z
    w = z
    for _ in range(6):
        w = w.galois(2)
    assert w == z


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(
    lambda n: st.tuples(elements(n), elements(n), units(n), units(n))))
def test_galois_is_a_homomorphism(case):
    a, b, k1, k2 = case
    n = a.order
    assert a.galois(k2).galois(k1) == a.galois(k1 * k2 % n)
    assert (a + b).galois(k1) == a.galois(k1) + b.galois(k1)
    assert (a * b).galois(k1) == a.galois(k1) * b.galois(k1)


def test_sqrt5():
    s = sqrt5_element()
    assert s == CyclotomicNumber.from_coeffs(5, [1, 2, 0, 0, 2])
    assert s * s == 5
    assert s.galois(2) == -s
    assert s.galois(4) == s
    assert abs(complex(s) - 5 ** 0.5) < 1e-12


def test_rational_conversion():
    q = CyclotomicNumber.rational(9, Fraction(3, 7))
    assert q.is_rational() and q.to_fraction() == Fraction(3, 7)
    assert not Z(9).is_rational()

"""The character map, the kernel ideal M and its free generator."""

import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf

from dihedral_noether import lattice as LT
from dihedral_noether.ratfield.ratfunc import transfer
from dihedral_noether.replay.d9 import y_action

vectors = st.lists(st.integers(-6, 6), min_size=LT.RANK, max_size=LT.RANK).map(tuple)


def test_phi_examples():
    assert LT.phi(LT.GroupRingElt.from_subscripts({1: 1})) == 1
    assert LT.phi(LT.GroupRingElt.from_subscripts({1: 1, 8: 1})) == 0
    assert LT.phi(LT.GroupRingElt.from_subscripts({2: 3, 4: 1})) == 1


def test_phi_is_surjective():
    units = [LT.GroupRingElt(tuple(int(i == p) for i in range(LT.RANK))) for p in range(LT.RANK)]
    hit = {LT.phi(a + b) for a, b in itertools.product(units + [LT.GroupRingElt((0,) * 6)],
                                                        repeat=2)}
    assert hit == set(range(9))


@settings(max_examples=60, deadline=None)
@given(vectors, vectors)
def test_phi_is_additive_and_rho_equivariant(a, b):
    ea, eb = LT.GroupRingElt(a), LT.GroupRingElt(b)
    assert LT.phi(ea + eb) == (LT.phi(ea) + LT.phi(eb)) % 9
    assert LT.phi(ea.rho()) == 2 * LT.phi(ea) % 9


def test_kernel_index_and_membership():
    L = LT.kernel_lattice()
    assert L.index == 9
    assert L.contains(LT.GroupRingElt.from_subscripts({1: 9}).coeffs)
    assert not L.contains(LT.GroupRingElt.from_subscripts({1: 1}).coeffs)
    assert L.rho_closed()


def test_hnf_matches_sympy():
    # integer lattice spanned by the kernel basis: same index as sympy's HNF
    L = LT.kernel_lattice()
    H = sympy_hnf(sympy.Matrix(L.basis).T)
    assert abs(H.det()) == 9


@settings(max_examples=40, deadline=None)
@given(st.lists(vectors, min_size=6, max_size=6))
def test_hnf_preserves_the_lattice_index(rows):
    det = sympy.Matrix(rows).det()
    if det == 0:
        return
    H = LT.hermite_normal_form(rows)
    assert all(H[i][j] == 0 for i in range(6) for j in range(i))
    assert abs(sympy.Matrix(H).det()) == abs(det)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_determinants_agree(rows):
    d = sympy.Matrix(rows).det()
    assert LT.bareiss_determinant(rows) == d == LT.cofactor_determinant(rows)


@settings(max_examples=60, deadline=None)
@given(vectors)
def test_kernel_is_rho_stable(v):
    L = LT.kernel_lattice()
    e = LT.GroupRingElt(v)
    if LT.phi(e) == 0:
        assert L.contains(e.rho().coeffs)
    else:
        assert not L.contains(e.coeffs)


def test_free_generator_found():
    w = LT.find_free_generator(3)
    assert w and abs(w.determinant) == 1
    assert w.oracle_determinant == w.determinant
    assert sympy.Matrix(w.coordinate_matrix).det() == w.determinant
    assert LT.phi(w.generator) == 0
    # frozen witness: first hit in the enumeration order
    assert w.generator.coeffs == (-1, 0, -1, 0, 0, 1)


def test_zero_vector_is_not_a_generator():
    L = LT.kernel_lattice()
    C = LT.orbit_coordinates(L, LT.GroupRingElt((0,) * 6))
    assert LT.bareiss_determinant(C) == 0


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        LT.find_free_generator(0)


def test_monomials_from_exponents():
    spec = y_action()
    Y = spec.ring
    one = LT.GroupRingElt.from_subscripts({1: 1})
    assert transfer(LT.monomial_from_exponents(one), Y) == Y.var("y1")
    m = transfer(LT.monomial_from_exponents(LT.GroupRingElt.from_subscripts({1: 1, 8: 1})), Y)
    assert m == Y.var("y1") * Y.var("y8")
    assert spec.apply_word("sigma", m) == m


@settings(max_examples=30, deadline=None)
@given(vectors)
def test_sigma_fixes_monomials_of_M(v):
    spec = y_action()
    e = LT.GroupRingElt(v)
    if LT.phi(e) != 0:
        return
    m = transfer(LT.monomial_from_exponents(e), spec.ring)
    assert spec.apply_word("sigma", m) == m


def test_generator_orbit_spans_M():
    spec = y_action()
    w = LT.find_free_generator(3)
    L = LT.kernel_lattice()
    # every basis vector of M has integer coordinates in the orbit of z0
    orbit = sympy.Matrix([g.coeffs for g in w.generator.orbit()])
    for row in L.basis:
        sol = orbit.T.solve(sympy.Matrix(row))
        assert all(c.is_integer for c in sol)
    z0 = transfer(LT.monomial_from_exponents(w.generator), spec.ring)
    assert spec.apply_word("sigma", z0) == z0

"""Descent toolkit: affine and line descent, the involution certifier,
the quotient identity and the two-variable monomial search."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_noether import actions as A
from dihedral_noether import descent as D
from dihedral_noether.ratfield.ratfunc import Ring

y0s, z1s, z2s = sympy.symbols("y0 z1 z2")
SIGMA6 = {y0s: y0s * z1s, z1s: z2s, z2s: -1 / (z1s * z2s)}
TAU6 = {y0s: y0s, z1s: -z1s * z2s, z2s: 1 / z2s}


def sympy_fixed(expr, action):
    return sympy.simplify(expr.subs(action, simultaneous=True) - expr) == 0


def to_sympy(f):
    names = {v: sympy.Symbol(v) for v in f.ring.variables}
    return sympy.sympify(str(f).replace("^", "**"), locals=names)


def d6_z_spec():
    Z = Ring(("y0", "z1", "z2"))
    w0, z1, z2 = Z.gens()
    sig = A.FieldAut(Z, [w0 * z1, z2, -1 / (z1 * z2)])
    tau = A.FieldAut(Z, [w0, -z1 * z2, 1 / z2])
    return A.ActionSpec(Z, {"sigma": sig, "tau": tau}, A.dihedral_relations(6))


def d6_monomial_spec():
    S = Ring(("z1", "z2"))
    a, b = S.gens()
    return A.ActionSpec(S, {"sigma": A.FieldAut(S, [b, -1 / (a * b)]),
                            "tau": A.FieldAut(S, [-a * b, 1 / b])}, A.dihedral_relations(6))


# -- affine descent ------------------------------------------------------------

def test_trivial_affine_cocycle():
    R = Ring(["a", "x"])
    a, x = R.gens()
    spec = A.ActionSpec(R, {"sigma": A.FieldAut(R, {"a": -a})}, ["sigma^2"])
    r = D.trivialize_affine(spec, ["x"])
    assert r.certificate.ok
    assert (r.invariants[0] / x).is_constant()


def test_affine_w_plane():
    W = Ring(("w1", "w2"), 9)
    w1, w2 = W.gens()
    spec = A.ActionSpec(W, {"rho": A.FieldAut(W, {"w1": w2, "w2": 1 - w1 - w2}, 2)}, ["rho^6"])
    r = D.trivialize_affine(spec, ["w1", "w2"], names=["X", "Y"])
    assert r.certificate.ok and len(r.invariants) == 2
    rho = spec.generators["rho"]
    assert all(rho(f) == f for f in r.invariants)


def test_affine_cyclic_permutation_over_zeta9():
    Z = Ring(tuple(f"z{i}" for i in range(6)), 9)
    zs = Z.gens()
    rho = A.FieldAut(Z, {f"z{i}": zs[(i + 1) % 6] for i in range(6)}, 2)
    spec = A.ActionSpec(Z, {"rho": rho}, ["rho^6"])
    r = D.trivialize_affine(spec, [f"z{i}" for i in range(6)])
    assert r.certificate.ok and len(r.invariants) == 6
    assert all(rho(f) == f for f in r.invariants)


def test_affine_cocycle_law():
    spec = d6_z_spec()
    c = D.affine_cocycle(spec, ["y0"])
    assert c.law_failures(list(spec.generators.values())) == []


def test_affine_is_deterministic():
    W = Ring(("w1", "w2"), 9)
    w1, w2 = W.gens()
    spec = A.ActionSpec(W, {"rho": A.FieldAut(W, {"w1": w2, "w2": 1 - w1 - w2}, 2)}, ["rho^6"])
    a = D.trivialize_affine(spec, ["w1", "w2"], seed=5)
    b = D.trivialize_affine(spec, ["w1", "w2"], seed=5)
    assert [str(f) for f in a.invariants] == [str(f) for f in b.invariants]


def test_unfaithful_base_is_rejected():
    R = Ring(["a", "x"])
    a, x = R.gens()
    spec = A.ActionSpec(R, {"sigma": A.FieldAut(R, {"x": -x})}, ["sigma^2"])
    with pytest.raises(D.DescentError):
        D.trivialize_affine(spec, ["x"])


# -- line descent ----------------------------------------------------------------

def test_trivial_line_cocycle():
    R = Ring(["a", "x"])
    a, x = R.gens()
    spec = A.ActionSpec(R, {"sigma": A.FieldAut(R, {"a": -a})}, ["sigma^2"])
    r = D.line_descent(spec, "x")
    assert r.certificate.ok and (r.invariant / x).is_constant()


def test_d6_line_descent():
    spec = d6_z_spec()
    r = D.line_descent(spec, "y0")
    assert r.certificate.ok and r.kernel_order == 2
    Z = spec.ring
    w0, z1, z2 = Z.gens()
    # frozen default-seed witness, re-checked by sympy
    assert r.invariant == -4 * w0 ** 2 * (z1 ** 2 * z2 ** 2 + z1 ** 2 + 1)
    expr = to_sympy(r.invariant)
    assert sympy_fixed(expr, SIGMA6) and sympy_fixed(expr, TAU6)


def test_hilbert_90_multiplier():
    spec = d6_z_spec()
    r = D.line_descent(spec, "y0")
    c = r.multiplier
    for g in spec.generators.values():
        a_g = g(r.reduced) / r.reduced
        assert g(c) == c / a_g


def test_d10_line_descent_on_z1():
    from dihedral_noether.replay import d10  # noqa: F401
    U = Ring(["z1", "u2", "u3", "u4"], 5)
    w1, u2, u3, u4 = U.gens()
    z = U.K.zeta
    spec = A.ActionSpec(U, {
        "sigma": A.FieldAut(U, [-z(1) * w1, z(1) * u2, z(1) * u3, z(1) * u4]),
        "tau": A.FieldAut(U, [z(3) * w1 * u2 * u3 * u4, z(3) / u4, z(3) / u3, z(3) / u2]),
        "rho": A.FieldAut(U, [w1 * u2, u3 * u4, 1 / (u2 * u3 * u4), u2 * u3], 2)})
    r = D.line_descent(spec, "z1")
    assert r.certificate.ok
    assert all(g(r.invariant) == r.invariant for g in spec.generators.values())


# -- the involution certifier ---------------------------------------------------

def test_involution_unit():
    Q0 = Ring(())
    r = D.involution_uv(Q0.const(1), Q0.const(1))
    assert r.certificate.ok
    x, y = r.ring.gens()
    s = A.FieldAut(r.ring, [1 / x, 1 / y])
    assert s(r.u) == r.u and s(r.v) == r.v


def test_involution_t_over_sqrt5():
    T = Ring(["t"], 5)
    t = T.var("t")
    r = D.involution_uv(t, 1 / t)
    assert r.certificate.ok
    assert r.expressions["T^0"] is not None


@settings(max_examples=10, deadline=None)
@given(st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool),
       st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool))
def test_involution_random_rationals(a, b):
    Q0 = Ring(())
    r = D.involution_uv(Q0.const(a), Q0.const(b), ansatz_cap=8)
    assert r.certificate.ok


def test_involution_symbolic_parameters():
    B = Ring(["a", "b"])
    a, b = B.gens()
    r = D.involution_uv(a, b, ansatz_cap=8)
    assert all(c.ok for c in r.certificate.checks if c.kind == "invariance")


def test_involution_rejects_zero():
    Q0 = Ring(())
    with pytest.raises(D.DescentError):
        D.involution_uv(Q0.const(0), Q0.const(1))


# -- quotient identity---------------------------------------------------------------

def test_quotient_identity():
    rep = D.verify_quotient_identity(100, 0)
    assert rep.formal and rep.ok and rep.specializations >= 100
    assert rep.excluded_locus_consistent


def test_quotient_identity_at_a_point():
    a, b, x, y = map(Fraction, (1, 1, 2, 3))
    u = (x - a / x) / (x * y - a * b / (x * y))
    v = (y - b / y) / (x * y - a * b / (x * y))
    lhs = (x - a / x) / (a * y / x - b * x / y)
    assert lhs == -u / (b * u * u - a * v * v)


# -- monomial search -------------------------------------------------------------------

def test_monomial_trivial_group():
    S = Ring(["x1", "x2"])
    r = D.monomial_fixed_2var(A.ActionSpec(S, {}, []), 2)
    assert r and (r.f, r.g) == S.gens()


def test_monomial_z2_inversion():
    S = Ring(["x1", "x2"])
    x1, x2 = S.gens()
    spec = A.ActionSpec(S, {"sigma": A.FieldAut(S, [1 / x1, x2])}, ["sigma^2"])
    r = D.monomial_fixed_2var(spec, 2)
    assert r and r.certificate.ok
    assert r.f == x1 + 1 / x1 and r.g == x2


def test_d6_monomial_search():
    spec = d6_monomial_spec()
    r = D.monomial_fixed_2var(spec, 3)
    # sigma^3 = -1 on the y-span, so only D6/center acts on the ratios
    assert r and r.certificate.ok and r.group_order == 6
    S = spec.ring
    z1, z2 = S.gens()
    assert r.f == (z1 ** 2 * z2 ** 2 - z1 ** 2 * z2 - z1 * z2 ** 2 - z1 - z2 + 1) / (z1 * z2)
    assert r.g == (z1 ** 3 * z2 ** 3 - z1 ** 3 + 1) / (z1 ** 2 * z2)
    sig = {z1s: z2s, z2s: -1 / (z1s * z2s)}
    tau = {z1s: -z1s * z2s, z2s: 1 / z2s}
    for f in (r.f, r.g):
        assert sympy_fixed(to_sympy(f), sig) and sympy_fixed(to_sympy(f), tau)


def test_pool_elements_avoid_the_fibre():
    R = Ring(["a", "b", "x"], 9)
    rng = random.Random(1)
    for _ in range(20):
        f = D.pool_element(rng, R, ["a", "b"], 2)
        assert "x" not in f.variables_used()

"""Group actions: words, presentations, the DFT change and operator polynomials."""

from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_noether import actions as A
from dihedral_noether.ratfield.ratfunc import Ring
from dihedral_noether.ratfield.solve import roundtrip_check
from dihedral_noether.replay import d9, d10
from dihedral_noether.replay.regular import permutation_action, signed_action


def d9_x():
    return d9.x_action()


def test_parse_word():
    assert A.parse_word("tau*rho^3") == [("tau", 1), ("rho", 3)]
    assert A.parse_word("tau rho^-1") == [("tau", 1), ("rho", -1)]
    assert A.parse_word("") == [] and A.parse_word("1") == []


def test_words_apply_right_to_left():
    spec = d9.y_action()
    y = spec.ring.gens()
    # tau rho^3 fixes every y_i
    for i in range(9):
        assert spec.apply_word("tau*rho^3", y[i]) == y[i]
    assert spec.apply_word("", y[4]) == y[4]
    assert spec.apply_word("sigma*rho", y[1]) == spec.apply_word("sigma", y[2])


words = st.lists(st.sampled_from(["sigma", "tau", "rho", "sigma^-1", "rho^2"]), max_size=4).map(
    lambda ws: "*".join(ws))


@settings(max_examples=40, deadline=None)
@given(words, words, st.integers(0, 8))
def test_apply_word_respects_concatenation(w1, w2, i):
    spec = d9.y_action()
    f = spec.ring.var(f"y{i}") + spec.ring.zeta(1)
    joined = "*".join(w for w in (w1, w2) if w)
    assert spec.apply_word(joined, f) == spec.apply_word(w1, spec.apply_word(w2, f))
    assert spec.word_aut(joined)(f) == spec.apply_word(joined, f)


def test_rho_squared_on_txy():
    T = Ring(["t", "x", "y"], 5)
    t, x, y = T.gens()
    rho = A.FieldAut(T, [1 / t, y, t / x], 2)
    spec = A.ActionSpec(T, {"rho": rho}, ["rho^4"])
    assert spec.apply_word("rho^2", x) == t / x
    assert spec.verify_presentation().ok


def test_d9_permutation_presentation():
    rep = permutation_action(9).verify_presentation()
    assert rep.ok and len(rep.entries) == 3
    assert d9_x().verify_presentation().ok


def test_d10_signed_action():
    spec = signed_action(10)
    assert spec.verify_presentation(["sigma^10"]).ok
    ok, detail = spec.acts_trivially("sigma^5")
    assert not ok and "y0 -> -y0" in detail


def test_trivial_group():
    R = Ring(["x"])
    assert A.ActionSpec(R, {}, []).verify_presentation().ok
    assert len(A.ActionSpec(R, {}, []).elements()) == 1


def test_group_orders():
    assert len(permutation_action(9).elements()) == 18
    assert len(d10.y_action().elements()) == 80


def test_dft_change_n9():
    ch = A.dft_change(9)
    xspec = d9_x()
    y1 = ch.definitions(ch.new.var("y1"))
    y2 = ch.definitions(ch.new.var("y2"))
    assert xspec.apply_word("sigma", y1) == y1 * ch.old.zeta(1)
    assert xspec.apply_word("rho", y1) == y2
    assert roundtrip_check(ch.definitions, ch.inverse)


def test_dft_change_n1():
    ch = A.dft_change(1)
    assert ch.definitions.images == (ch.old.var("x0"),)
    assert roundtrip_check(ch.definitions, ch.inverse)


def test_operator_polynomial_products():
    yspec = d10.y_action()
    Y = yspec.ring
    K = Y.K
    coeffs = A.expand_linear_factors([K.zeta(j) for j in (0, 2, 3, 4)], K.one)
    z1 = A.operator_poly_apply(yspec, "sigma", coeffs, Y.var("y0"))
    assert A.check_semi_invariant(yspec, "sigma", z1, -K.zeta(1), z1)
    coeffs4 = A.expand_linear_factors([K.zeta(j) for j in (0, 1, 2, 3)], K.one)
    z4 = A.operator_poly_apply(yspec, "sigma", coeffs4, Y.var("y0"))
    assert A.check_semi_invariant(yspec, "tau", z1, K.zeta(-2), z4)
    f = Y.var("y3") / Y.var("y1")
    assert A.operator_poly_apply(yspec, "sigma", [K.one], f) == f


def test_expand_linear_factors():
    # (S + 1)(S + 2) = S^2 + 3S + 2
    assert A.expand_linear_factors([1, 2], 1) == [2, 3, 1]


def test_check_semi_invariant_examples():
    U = Ring(["u2", "u3", "u4"], 5)
    u2, u3, u4 = U.gens()
    z = U.K.zeta(1)
    sig = A.FieldAut(U, [u2 * z, u3 * z, u4 * z])
    spec = A.ActionSpec(U, {"sigma": sig})
    for u in (u2, u3, u4):
        assert A.check_semi_invariant(spec, "sigma", u, z, u)
    assert A.check_semi_invariant(spec, "", u3 / u2, 1, u3 / u2)
    V = Ring(["v1", "v2", "v3"], 5)
    v1, v2, v3 = V.gens()
    rho = A.FieldAut(V, [v1 ** 2 * v2 ** 5 * v3 ** 5, 1 / v2, 1 / (v1 * v2 ** 2 * v3 ** 2)], 2)
    assert A.check_semi_invariant(A.ActionSpec(V, {"rho": rho}), "rho", v2, 1, 1 / v2)


def test_transport_along_a_change_of_variables():
    Y = Ring(["y0", "y1", "y2"])
    y0, y1, y2 = Y.gens()
    Z = Ring(["y0", "z1", "z2"])
    w0, z1, z2 = Z.gens()
    from dihedral_noether.ratfield.ratfunc import SubstitutionMap
    defs = SubstitutionMap(Z, Y, [y0, y1 / y0, y2 / y1])
    old = A.FieldAut(Y, [y1, y2, -y0])
    new = A.FieldAut(Z, [w0 * z1, z2, -1 / (z1 * z2)])
    assert all(c.ok for c in A.check_transport(old, defs, new))
    wrong = A.FieldAut(Z, [w0 * z1, z2, 1 / (z1 * z2)])
    assert not all(c.ok for c in A.check_transport(old, defs, wrong))


def test_inverse_and_order():
    spec = d10.z_action()
    for g in spec.generators.values():
        assert (g * g.inverse()).is_identity()
    assert spec.generators["rho"].order() == 4
    assert spec.generators["sigma"].order() == 10

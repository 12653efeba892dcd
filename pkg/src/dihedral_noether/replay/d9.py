"""Replay for D_9 over Q(zeta_9): DFT variables, the character lattice and its
free generator, the u/s split, the v-coordinates and the final w-plane.

Rings after the lattice step keep tau as a generator: on them tau*rho^3 acts
only on zeta (as zeta -> zeta^-1), so invariants of <tau, rho> over Q(zeta)
are exactly the rho-invariants over Q(eta).
"""

from __future__ import annotations

from fractions import Fraction

from .. import actions as A
from .. import descent as D
from .. import lattice as LT
from ..actions import mod_index
from ..cyclotomic import CyclotomicNumber, eta
from ..ratfield import linalg
from ..ratfield.ratfunc import Ring, SubstitutionMap, transfer
from ..ratfield.solve import ansatz_escalate, orbit_min_poly
from .recorder import Recorder, Stage
from .regular import regular_reduction

N = 9
UNITS = (1, 2, 4, 5, 7, 8)
EXTRA_RELATIONS = ["rho^6", "rho*sigma*rho^-1*sigma^-1", "rho*tau*rho^-1*tau^-1"]


def x_action() -> A.ActionSpec:
    X = Ring([f"x{i}" for i in range(N)], N)
    x = X.gens()
    s = A.FieldAut(X, [x[mod_index(i + 1, N)] for i in range(N)])
    t = A.FieldAut(X, [x[mod_index(-i, N)] for i in range(N)])
    r = A.FieldAut(X, list(x), 2)
    return A.ActionSpec(X, {"sigma": s, "tau": t, "rho": r},
                        A.dihedral_relations(N) + EXTRA_RELATIONS, "D9 x pi on x")


def y_action() -> A.ActionSpec:
    Y = Ring([f"y{i}" for i in range(N)], N)
    y = Y.gens()
    z = Y.K.zeta
    s = A.FieldAut(Y, [y[i] * z(i) for i in range(N)])
    t = A.FieldAut(Y, [y[mod_index(-i, N)] for i in range(N)])
    r = A.FieldAut(Y, [y[mod_index(2 * i, N)] for i in range(N)], 2)
    return A.ActionSpec(Y, {"sigma": s, "tau": t, "rho": r},
                        A.dihedral_relations(N) + EXTRA_RELATIONS, "D9 x pi on y")


def _integer_inverse(C):
    inv = linalg.inverse([[Fraction(a) for a in row] for row in C], Fraction(1), Fraction(0))
    if any(a.denominator != 1 for row in inv for a in row):
        return None
    return [[int(a) for a in row] for row in inv]


def replay_d9(seed: int = 0, bound: int = 3, ansatz_cap: int = 32):
    rec = Recorder("d9", seed, {"search_bound": bound, "ansatz_cap": ansatz_cap})
    regular_reduction(N, rec, seed)

    # DFT
    xspec = x_action()
    rec.presentation("d9/dft/extension", "DFT", "sigma, tau, rho on Q(zeta)(x) satisfy the "
                     "D9 relations, rho^6 = 1 and rho commutes with sigma, tau", xspec)
    order2 = next(k for k in range(1, N + 1) if pow(2, k, N) == 1)
    rec.add("d9/dft/rho-generates", "DFT", "relation",
            "rho: zeta -> zeta^2 generates Gal(Q(zeta)/Q)", order2 == 6,
            {"order of 2 mod 9": order2, "phi(9)": 6})
    dft = A.dft_change(N)
    X = xspec.ring
    Y = dft.new
    rec.roundtrip("d9/dft/dft", "DFT", "Q(zeta)(x) = Q(zeta)(y), y_i = sum zeta^(-ij) x_j",
                  dft.definitions, dft.inverse)
    st = Stage(xspec, dft.definitions)
    y = Y.gens()
    ring_zeta = Y.K.zeta
    rec.arrows("d9/dft/sigma-y", "DFT", "sigma: y_i -> zeta^i y_i", st, "sigma",
               [(y[i], ring_zeta(i), y[i]) for i in range(N)])
    rec.arrows("d9/dft/tau-y", "DFT", "tau: y_i -> y_{-i}", st, "tau",
               [(y[i], 1, y[mod_index(-i, N)]) for i in range(N)])
    rec.arrows("d9/dft/rho-y", "DFT", "rho: y_i -> y_{2i}", st, "rho",
               [(y[i], 1, y[mod_index(2 * i, N)]) for i in range(N)])
    rec.arrows("d9/dft/tau-rho3", "DFT", "tau rho^3 (y_i) = y_i", st, "tau*rho^3",
               [(y[i], 1, y[i]) for i in range(N)], kind="invariance")
    yspec = y_action()
    rec.presentation("d9/dft/y-presentation", "DFT", "the y-table satisfies the relations",
                     yspec)
    res = D.trivialize_affine(yspec, ["y0", "y3", "y6"], seed=seed, names=["p0", "p3", "p6"])
    rec.descent("d9/dft/unit-descent", "DFT",
                "Q(zeta)(y)^G = Q(zeta)(y_i: i unit)^G(p_0, p_3, p_6)", res.certificate,
                {"fibre": "y0, y3, y6", "group order": len(yspec.elements()),
                 "attempts": res.attempts})

    # lattice
    mono = {i: Y.var(f"y{i}") for i in UNITS}
    phi_ok, rho_ok = True, True
    rows = []
    for p, i in enumerate(LT.ORBIT):
        e = LT.GroupRingElt(tuple(1 if q == p else 0 for q in range(LT.RANK)))
        j = LT.phi(e)
        phi_ok &= yspec.apply_word("sigma", mono[i]) == mono[i] * ring_zeta(j)
        phi_ok &= LT.phi(e.rho()) == (2 * j) % N
        rho_ok &= transfer(LT.monomial_from_exponents(e.rho()), Y) == yspec.apply_word("rho", mono[i])
        rows.append(f"y{i}: phi = {j}")
    rec.add("d9/lattice/phi", "lattice", "lattice-witness",
            "Phi(y) = j when sigma(y) = zeta^j y, and Phi(rho y) = 2 Phi(y)", phi_ok,
            {"values": rows})
    rec.add("d9/lattice/lambda", "lattice", "lattice-witness",
            "rho acts on the unit y's as the cyclic shift of Lambda = Z[pi]", rho_ok,
            {"orbit order": list(LT.ORBIT), "unit residues": list(UNITS)})
    L = LT.kernel_lattice()
    rec.add("d9/lattice/kernel-index", "lattice", "lattice-witness",
            "M = ker Phi is a rho-stable ideal with [Lambda : M] = 9",
            L.index == 9 and L.rho_closed(), {"index": L.index,
                                               "basis": [str(r) for r in L.basis]})
    basis_monos = [transfer(LT.monomial_from_exponents(LT.GroupRingElt(tuple(r))), Y)
                   for r in L.basis]
    rec.fixed("d9/lattice/kernel-fixed", "lattice", "sigma fixes the monomials of M", yspec, "sigma",
              basis_monos)

    # Steps 3 and 4
    wit = LT.find_free_generator(bound, L)
    if not wit:
        rec.add("d9/orbit/free-generator", "orbit", "lattice-witness",
                "M is free over Lambda, generated by z_0", False,
                {"bound": bound}, {"reason": f"no generator at bound {bound}"})
        raise D.DescentError(f"no free generator of M with entries bounded by {bound}")
    rec.add("d9/orbit/free-generator", "orbit", "lattice-witness",
            "M is free over Lambda, generated by z_0", abs(wit.determinant) == 1
            and wit.determinant == wit.oracle_determinant,
            {"bound": bound, "exponents": list(wit.generator.coeffs)},
            {"determinant": wit.determinant, "oracle determinant": wit.oracle_determinant,
             "examined": wit.examined, "z0": LT.monomial_from_exponents(wit.generator),
             "orbit order": list(LT.ORBIT)})
    z0 = transfer(LT.monomial_from_exponents(wit.generator), Y)
    zimgs = [z0]
    for _ in range(5):
        zimgs.append(yspec.apply_word("rho", zimgs[-1]))
    rec.fixed("d9/orbit/z-fixed", "orbit", "sigma fixes z_0, ..., z_5", yspec, "sigma", zimgs)
    Cinv = _integer_inverse(wit.coordinate_matrix)
    gen_ok = Cinv is not None
    if gen_ok:
        for j, b in enumerate(basis_monos):
            prod = Y.one()
            for i in range(6):
                prod = prod * zimgs[i] ** Cinv[j][i]
            gen_ok &= prod == b
    rec.add("d9/orbit/z-generate", "orbit", "field-equality",
            "Q(M) = Q(z_0, ..., z_5): each basis monomial of M is a z-monomial", gen_ok,
            {"inverse orbit matrix": [str(r) for r in (Cinv or [])]})
    Z = Ring([f"z{i}" for i in range(6)], N)
    z = Z.gens()
    zst = Stage(yspec, SubstitutionMap(Z, Y, zimgs))
    rec.arrows("d9/orbit/rho-z", "orbit", "rho: z_0 -> z_1 -> ... -> z_5 -> z_0", zst, "rho",
               [(z[i], 1, z[mod_index(i + 1, 6)]) for i in range(6)])
    rec.arrows("d9/orbit/tau-rho3-z", "orbit", "tau rho^3 is the identity on Q(z_0, ..., z_5)",
               zst, "tau*rho^3", [(z[i], 1, z[i]) for i in range(6)], kind="invariance")
    rec.arrows("d9/orbit/tau-z", "orbit", "tau: z_i -> z_{i+3}", zst, "tau",
               [(z[i], 1, z[mod_index(i + 3, 6)]) for i in range(6)])
    e9 = eta(N)
    k = yspec.word_galois("tau*rho^3")
    zeta = CyclotomicNumber.zeta(N)
    quad = zeta * zeta - e9 * zeta + 1
    rec.add("d9/orbit/eta", "orbit", "field-equality",
            "tau rho^3 restricts to zeta -> zeta^-1 on Q(zeta), with fixed field Q(eta) of index 2",
            k == N - 1 and e9.galois(k) == e9 and zeta.galois(k) != zeta and quad.is_zero(),
            {"galois exponent": k, "eta": e9, "min poly of zeta over Q(eta)": "T^2 - eta*T + 1"})
    zspec = A.ActionSpec(Z, {"tau": A.FieldAut(Z, [z[mod_index(i + 3, 6)] for i in range(6)]),
                             "rho": A.FieldAut(Z, [z[mod_index(i + 1, 6)] for i in range(6)], 2)},
                         ["rho^6", "tau^2", "rho*tau*rho^-1*tau^-1"], "rho, tau on z")

    US = Ring(["u0", "u1", "u2", "s0", "s1", "s2"], N)
    uv = US.gens()
    u, s = uv[:3], uv[3:]
    usdefs = SubstitutionMap(US, Z, [z[i] - z[i + 3] for i in range(3)]
                             + [z[i] + z[i + 3] for i in range(3)])
    usinv = SubstitutionMap(Z, US, [(s[i] + u[i]) / 2 for i in range(3)]
                            + [(s[i] - u[i]) / 2 for i in range(3)])
    rec.roundtrip("d9/orbit/us-change", "orbit",
                  "Q(z) = Q(u, s), u_i = z_i - z_{i+3}, s_i = z_i + z_{i+3}", usdefs, usinv)
    ust = Stage(zspec, usdefs)
    rec.arrows("d9/orbit/rho-u", "orbit", "rho: u_0 -> u_1 -> u_2 -> -u_0", ust, "rho",
               [(u[0], 1, u[1]), (u[1], 1, u[2]), (u[2], -1, u[0])])
    rec.arrows("d9/orbit/rho-s", "orbit", "rho: s_0 -> s_1 -> s_2 -> s_0", ust, "rho",
               [(s[0], 1, s[1]), (s[1], 1, s[2]), (s[2], 1, s[0])])
    rec.arrows("d9/orbit/tau-us", "orbit", "tau: u_i -> -u_i, s_i -> s_i", ust, "tau",
               [(u[i], -1, u[i]) for i in range(3)] + [(s[i], 1, s[i]) for i in range(3)])
    usspec = A.ActionSpec(US, {
        "tau": A.FieldAut(US, [-u[0], -u[1], -u[2], s[0], s[1], s[2]]),
        "rho": A.FieldAut(US, [u[1], u[2], -u[0], s[1], s[2], s[0]], 2)},
        ["rho^6", "tau^2", "rho*tau*rho^-1*tau^-1"], "rho, tau on u, s")
    res = D.trivialize_affine(usspec, ["s0", "s1", "s2"], seed=seed, names=["c0", "c1", "c2"])
    rec.descent("d9/orbit/s-descent", "orbit", "Q(eta)(u, s)^rho = Q(eta)(u)^rho(c_0, c_1, c_2)",
                res.certificate, {"fibre": "s0, s1, s2", "attempts": res.attempts})

    # quotient
    rec.arrows("d9/quotient/rho3-u", "quotient", "rho^3(u_i) = -u_i", ust, "rho^3",
               [(u[i], -1, u[i]) for i in range(3)])
    V = Ring(["v0", "v1", "v2"], N)
    v = V.gens()
    vdefs_imgs = [u[0] ** 2, u[1] / u[0], u[2] / u[1]]
    vst = Stage(usspec, SubstitutionMap(V, US, vdefs_imgs))
    ident, tauU = A.FieldAut.identity(US), usspec.generators["tau"]
    mp = orbit_min_poly(u[0], [ident, tauU])
    cert = D.InvariantCertificate(vdefs_imgs)
    for i, f in enumerate(vdefs_imgs):
        cert.add("invariance", f"v{i} fixed by rho^3 on u", tauU(f) == f)
    cert.add("field-equality", "u_0 has degree 2 over Q(v)", mp.degree == 2 and mp.invariant)
    for i, c in enumerate(mp.coefficients[:-1]):
        r, _ = ansatz_escalate(c, vdefs_imgs, cap=ansatz_cap, names=["v0", "v1", "v2"], seed=seed)
        cert.add("field-equality", f"min-poly coefficient T^{i} in Q(v)", bool(r),
                 "" if r else r.reason, expression=r.expression if r else "")
    for i in (1, 2):
        r, _ = ansatz_escalate(u[i], vdefs_imgs + [u[0]], cap=ansatz_cap,
                               names=["v0", "v1", "v2", "u0"], seed=seed)
        cert.add("field-equality", f"u{i} in Q(v)(u_0)", bool(r), "" if r else r.reason,
                 expression=r.expression if r else "")
    rec.certificate("d9/quotient/v-fixed-field", "quotient",
                    "Q(eta)(u)^<rho^3> = Q(eta)(v_0, v_1, v_2), v_0 = u_0^2, v_1 = u_1/u_0, "
                    "v_2 = u_2/u_1", cert, "field-equality")
    rec.arrows("d9/quotient/rho-v0", "quotient", "rho: v_0 -> v_0 v_1^2", vst, "rho",
               [(v[0], 1, v[0] * v[1] ** 2)])
    rec.arrows("d9/quotient/rho-v1", "quotient", "rho: v_1 -> v_2", vst, "rho", [(v[1], 1, v[2])])
    rec.arrows("d9/quotient/rho-v2", "quotient", "rho: v_2 -> -1/(v_1 v_2)", vst, "rho",
               [(v[2], -1, 1 / (v[1] * v[2]))])
    rec.arrows("d9/quotient/tau-v", "quotient", "tau fixes v_0, v_1, v_2", vst, "tau",
               [(v[i], 1, v[i]) for i in range(3)], kind="invariance")
    vspec = A.ActionSpec(V, {"rho": A.FieldAut(V, [v[0] * v[1] ** 2, v[2], -1 / (v[1] * v[2])], 2)},
                         ["rho^6"], "rho on v")
    line = D.line_descent(vspec, "v0", seed=seed, ansatz_cap=ansatz_cap)
    rec.descent("d9/quotient/v0-descent", "quotient",
                "Q(eta)(v_0, v_1, v_2)^rho = Q(eta)(v_1, v_2)^rho(v~) (noted reduction: the "
                "fibre v_0 is semi-linear, certified by line descent)",
                line.certificate, {"kernel order": line.kernel_order, "attempts": line.attempts},
                {"note": "reduction relies on sigma-semi-linearity of v0; certified by line descent"})

    # plane
    V2 = Ring(["v1", "v2"], N)
    a1, a2 = V2.gens()
    v2spec = A.ActionSpec(V2, {"rho": A.FieldAut(V2, [a2, -1 / (a1 * a2)], 2)}, ["rho^6"],
                          "rho on v1, v2")
    W = Ring(["w1", "w2"], N)
    w1, w2 = W.gens()
    den = 1 - a1 + a1 * a2
    wdefs = SubstitutionMap(W, V2, [1 / den, -a1 / den])
    winv = SubstitutionMap(V2, W, [-w2 / w1, (w1 + w2 - 1) / w2])
    rec.roundtrip("d9/plane/w-change", "plane", "Q(eta)(v_1, v_2) = Q(eta)(w_1, w_2)", wdefs, winv)
    wst = Stage(v2spec, wdefs)
    rec.arrows("d9/plane/rho-w1", "plane", "rho: w_1 -> w_2", wst, "rho", [(w1, 1, w2)])
    rec.arrows("d9/plane/rho-w2", "plane", "rho: w_2 -> -w_1 - w_2 + 1", wst, "rho",
               [(w2, 1, 1 - w1 - w2)])
    wspec = A.ActionSpec(W, {"rho": A.FieldAut(W, [w2, 1 - w1 - w2], 2)}, ["rho^6"], "rho on w")
    res = D.trivialize_affine(wspec, ["w1", "w2"], seed=seed, names=["X", "Y"])
    rec.descent("d9/plane/xy-descent", "plane", "Q(eta)(w_1, w_2) = Q(eta)(X, Y), X, Y fixed",
                res.certificate, {"attempts": res.attempts})
    Xf, Yf = res.invariants
    rec.fixed("d9/plane/rho-X", "plane", "rho(X) = X", wspec, "rho", [Xf])
    rec.fixed("d9/plane/rho-Y", "plane", "rho(Y) = Y", wspec, "rho", [Yf])
    orbit_eta = [e9, e9.galois(2), e9.galois(4)]
    c1 = orbit_eta[0] + orbit_eta[1] + orbit_eta[2]
    c2 = orbit_eta[0] * orbit_eta[1] + orbit_eta[0] * orbit_eta[2] + orbit_eta[1] * orbit_eta[2]
    c3 = orbit_eta[0] * orbit_eta[1] * orbit_eta[2]
    distinct = len({str(a) for a in orbit_eta}) == 3 and e9.galois(8) == e9
    rec.add("d9/plane/eta-rho", "plane", "field-equality",
            "Q(eta)^rho = Q: rho permutes eta, rho(eta), rho^2(eta) with rational symmetric functions",
            distinct and all(c.is_rational() for c in (c1, c2, c3)),
            {"min poly of eta": f"T^3 - ({c1})T^2 + ({c2})T - ({c3})"})
    return rec.finish()

"""Replay for D_10 over Q(zeta_5): the operator products z_i, ratios u_i,
sigma-invariants v_i, the coordinates t, x, y, the involution invariants
u, v, then w, s and the final pair sqrt5*X, sqrt5*Y.
"""

from __future__ import annotations

from .. import actions as A
from .. import descent as D
from ..actions import mod_index
from ..cyclotomic import CyclotomicNumber, eta, sqrt5_element
from ..ratfield import linalg
from ..ratfield.ratfunc import Ring, SubstitutionMap
from ..ratfield.solve import ansatz_escalate, orbit_min_poly
from .recorder import Recorder, Stage
from .regular import regular_reduction

N, P = 10, 5
EXTRA_RELATIONS = ["rho^4", "rho*sigma*rho^-1*sigma^-1", "rho*tau*rho^-1*tau^-1"]


def y_action() -> A.ActionSpec:
    Y = Ring([f"y{i}" for i in range(P)], P)
    y = Y.gens()
    s = A.FieldAut(Y, [y[i + 1] if i < P - 1 else -y[0] for i in range(P)])
    t = A.FieldAut(Y, [y[0]] + [-y[P - i] for i in range(1, P)])
    r = A.FieldAut(Y, list(y), 2)
    return A.ActionSpec(Y, {"sigma": s, "tau": t, "rho": r},
                        A.dihedral_relations(N) + EXTRA_RELATIONS, "D10 x pi on y")


def z_definitions(yspec: A.ActionSpec) -> list:
    """z_i = prod_{j != i} (sigma + zeta^j)(y_0), by expanding the operator polynomial."""
    Y = yspec.ring
    K = Y.K
    out = []
    for i in range(P):
        coeffs = A.expand_linear_factors([K.zeta(j) for j in range(P) if j != i], K.one)
        out.append(A.operator_poly_apply(yspec, "sigma", coeffs, Y.var("y0")))
    return out


def z_action() -> A.ActionSpec:
    Z = Ring([f"z{i}" for i in range(P)], P)
    z = Z.gens()
    K = Z.K
    s = A.FieldAut(Z, [z[i] * (-K.zeta(i)) for i in range(P)])
    t = A.FieldAut(Z, [z[mod_index(-i, P)] * K.zeta(-2 * i) for i in range(P)])
    r = A.FieldAut(Z, [z[mod_index(2 * i, P)] for i in range(P)], 2)
    return A.ActionSpec(Z, {"sigma": s, "tau": t, "rho": r},
                        A.dihedral_relations(N) + EXTRA_RELATIONS, "D10 x pi on z")


def replay_d10(seed: int = 0, bound: int = 3, ansatz_cap: int = 32):
    rec = Recorder("d10", seed, {"search_bound": bound, "ansatz_cap": ansatz_cap})
    reg = regular_reduction(N, rec, seed)
    Yq = reg.y_spec.ring
    yq = Yq.gens()
    rec.arrows("d10/recall-sigma", "Y", "sigma: y_0 -> y_1 -> y_2 -> y_3 -> y_4 -> -y_0",
               reg.y_stage, "sigma", [(yq[i], 1, yq[i + 1]) for i in range(P - 1)]
               + [(yq[P - 1], -1, yq[0])])
    rec.arrows("d10/recall-tau", "Y", "tau: y_0 -> y_0, y_1 -> -y_4, y_2 -> -y_3, y_3 -> -y_2, "
               "y_4 -> -y_1", reg.y_stage, "tau",
               [(yq[0], 1, yq[0])] + [(yq[i], -1, yq[P - i]) for i in range(1, P)])

    # operator products
    order2 = next(k for k in range(1, P + 1) if pow(2, k, P) == 1)
    rec.add("d10/products/rho-generates", "operator products", "relation",
            "rho: zeta -> zeta^2 generates Gal(Q(zeta)/Q)", order2 == 4,
            {"order of 2 mod 5": order2, "phi(5)": 4})
    yspec = y_action()
    Y = yspec.ring
    y = Y.gens()
    K = Y.K
    rec.presentation("d10/products/extension", "operator products", "sigma, tau, rho on Q(zeta)(y): D10 "
                     "relations, rho^4 = 1, rho central, sigma^5 = -1 on y", yspec,
                     expect_fail=["sigma^5"])
    zdefs_imgs = z_definitions(yspec)
    Z = Ring([f"z{i}" for i in range(P)], P)
    z = Z.gens()
    # z = M y with M over Q(zeta); invert for the roundtrip
    M = [[_linear_coeff(f, j) for j in range(P)] for f in zdefs_imgs]
    Minv = linalg.inverse(M, K.one, K.zero)
    zdefs = SubstitutionMap(Z, Y, zdefs_imgs)
    zinv = SubstitutionMap(Y, Z, [sum((z[j] * Minv[i][j] for j in range(P)), Z.zero())
                                  for i in range(P)])
    rec.roundtrip("d10/products/z-change", "operator products",
                  "Q(zeta)(y) = Q(zeta)(z), z_i = prod_{j != i} (sigma + zeta^j)(y_0)", zdefs, zinv)
    st = Stage(yspec, zdefs)
    rec.arrows("d10/products/sigma-z", "operator products", "sigma: z_i -> -zeta^i z_i", st, "sigma",
               [(z[i], -K.zeta(i), z[i]) for i in range(P)])
    ok = rec.arrows("d10/products/tau-z", "operator products", "tau: z_i -> zeta^(-2i) z_{-i}", st, "tau",
                    [(z[i], K.zeta(-2 * i), z[mod_index(-i, P)]) for i in range(P)])
    if not ok:
        rec.records[-1].witness["alternative exponents"] = _tau_exponents(st, z)
    rec.arrows("d10/products/rho-z", "operator products", "rho: zeta -> zeta^2, z_i -> z_{2i}", st, "rho",
               [(z[i], 1, z[mod_index(2 * i, P)]) for i in range(P)])
    zspec = z_action()
    rec.presentation("d10/products/z-presentation", "operator products", "the z-table satisfies the relations",
                     zspec)
    res = D.trivialize_affine(zspec, ["z0"], seed=seed, names=["p0"])
    rec.descent("d10/products/z0-descent", "operator products",
                "Q(zeta)(z)^G = Q(zeta)(z_1, ..., z_4)^G(p_0)", res.certificate,
                {"fibre": "z0", "group order": len(zspec.elements()), "attempts": res.attempts})

    # ratios
    Z4 = Ring([f"z{i}" for i in range(1, P)], P)
    z4 = Z4.gens()
    U1 = Ring(["z1", "u2", "u3", "u4"], P)
    w1, u2, u3, u4 = U1.gens()
    fwd = SubstitutionMap(U1, Z4, [z4[0], z4[1] / z4[0], z4[2] / z4[1], z4[3] / z4[2]])
    inv = SubstitutionMap(Z4, U1, [w1, w1 * u2, w1 * u2 * u3, w1 * u2 * u3 * u4])
    rec.roundtrip("d10/ratios/u-change", "ratios", "Q(zeta)(z_1, ..., z_4) = Q(zeta)(z_1, u_2, "
                  "u_3, u_4), u_i = z_i/z_{i-1}", fwd, inv)
    ust = Stage(zspec, SubstitutionMap(U1, Z, [z[1], z[2] / z[1], z[3] / z[2], z[4] / z[3]]))
    zeta = K.zeta
    rec.arrows("d10/ratios/sigma-z1", "ratios", "sigma: z_1 -> -zeta z_1", ust, "sigma",
               [(w1, -zeta(1), w1)])
    rec.arrows("d10/ratios/sigma-u", "ratios", "sigma: u_i -> zeta u_i for 2 <= i <= 4", ust,
               "sigma", [(u, zeta(1), u) for u in (u2, u3, u4)])
    rec.arrows("d10/ratios/tau-z1", "ratios", "tau: z_1 -> zeta^3 z_1 u_2 u_3 u_4", ust, "tau",
               [(w1, zeta(3), w1 * u2 * u3 * u4)])
    rec.arrows("d10/ratios/tau-u2", "ratios", "tau: u_2 -> zeta^3/u_4", ust, "tau",
               [(u2, zeta(3), 1 / u4)])
    rec.arrows("d10/ratios/tau-u3", "ratios", "tau: u_3 -> zeta^3/u_3", ust, "tau",
               [(u3, zeta(3), 1 / u3)])
    rec.arrows("d10/ratios/tau-u4", "ratios", "tau: u_4 -> zeta^3/u_2", ust, "tau",
               [(u4, zeta(3), 1 / u2)])
    rec.arrows("d10/ratios/rho-z1", "ratios", "rho: z_1 -> z_1 u_2", ust, "rho", [(w1, 1, w1 * u2)])
    rec.arrows("d10/ratios/rho-u2", "ratios", "rho: u_2 -> u_3 u_4", ust, "rho", [(u2, 1, u3 * u4)])
    rec.arrows("d10/ratios/rho-u3", "ratios", "rho: u_3 -> 1/(u_2 u_3 u_4)", ust, "rho",
               [(u3, 1, 1 / (u2 * u3 * u4))])
    rec.arrows("d10/ratios/rho-u4", "ratios", "rho: u_4 -> u_2 u_3", ust, "rho", [(u4, 1, u2 * u3)])
    z3 = zeta(3)
    u1spec = A.ActionSpec(U1, {
        "sigma": A.FieldAut(U1, [-zeta(1) * w1, zeta(1) * u2, zeta(1) * u3, zeta(1) * u4]),
        "tau": A.FieldAut(U1, [z3 * w1 * u2 * u3 * u4, z3 / u4, z3 / u3, z3 / u2]),
        "rho": A.FieldAut(U1, [w1 * u2, u3 * u4, 1 / (u2 * u3 * u4), u2 * u3], 2)},
        A.dihedral_relations(N) + EXTRA_RELATIONS, "D10 x pi on z1, u")
    line = D.line_descent(u1spec, "z1", seed=seed, ansatz_cap=ansatz_cap)
    rec.descent("d10/ratios/z1-descent", "ratios",
                "Q(zeta)(z_1, u)^G = Q(zeta)(u_2, u_3, u_4)^G(z~)", line.certificate,
                {"kernel order": line.kernel_order, "reduced": line.reduced,
                 "attempts": line.attempts})

    # sigma quotient
    U = Ring(["u2", "u3", "u4"], P)
    a2, a3, a4 = U.gens()
    uspec = A.ActionSpec(U, {
        "sigma": A.FieldAut(U, [zeta(1) * a2, zeta(1) * a3, zeta(1) * a4]),
        "tau": A.FieldAut(U, [z3 / a4, z3 / a3, z3 / a2]),
        "rho": A.FieldAut(U, [a3 * a4, 1 / (a2 * a3 * a4), a2 * a3], 2)},
        A.dihedral_relations(N) + EXTRA_RELATIONS, "D10 x pi on u")
    vimgs = [a2 ** 5, a4 / a2, a3 / a2]
    sig = uspec.generators["sigma"]
    group = [sig.power(k) for k in range(P)]
    mp = orbit_min_poly(a2, group)
    cert = D.InvariantCertificate(vimgs)
    for i, f in enumerate(vimgs):
        cert.add("invariance", f"v{i + 1} fixed by sigma", sig(f) == f)
    cert.add("field-equality", "u_2 has degree 5 over Q(zeta)(v)", mp.degree == 5 and mp.invariant)
    for i, c in enumerate(mp.coefficients[:-1]):
        r, _ = ansatz_escalate(c, vimgs, cap=ansatz_cap, names=["v1", "v2", "v3"], seed=seed)
        cert.add("field-equality", f"min-poly coefficient T^{i} in Q(zeta)(v)", bool(r),
                 "" if r else r.reason, expression=r.expression if r else "")
    for name, f in (("u3", a3), ("u4", a4)):
        r, _ = ansatz_escalate(f, vimgs + [a2], cap=ansatz_cap, names=["v1", "v2", "v3", "u2"],
                               seed=seed)
        cert.add("field-equality", f"{name} in Q(zeta)(v)(u_2)", bool(r), "" if r else r.reason,
                 expression=r.expression if r else "")
    rec.certificate("d10/sigma-quotient/v-fixed-field", "sigma quotient",
                    "Q(zeta)(u_2, u_3, u_4)^sigma = Q(zeta)(v_1, v_2, v_3), v_1 = u_2^5, "
                    "v_2 = u_4/u_2, v_3 = u_3/u_2", cert, "field-equality")
    V = Ring(["v1", "v2", "v3"], P)
    v1, v2, v3 = V.gens()
    vst = Stage(uspec, SubstitutionMap(V, U, vimgs))
    rec.arrows("d10/sigma-quotient/tau-v1", "sigma quotient", "tau: v_1 -> 1/(v_1 v_2^5)", vst, "tau",
               [(v1, 1, 1 / (v1 * v2 ** 5))])
    rec.arrows("d10/sigma-quotient/tau-v2", "sigma quotient", "tau: v_2 -> v_2", vst, "tau", [(v2, 1, v2)])
    rec.arrows("d10/sigma-quotient/tau-v3", "sigma quotient", "tau: v_3 -> v_2/v_3", vst, "tau", [(v3, 1, v2 / v3)])
    rec.arrows("d10/sigma-quotient/rho-v1", "sigma quotient", "rho: v_1 -> v_1^2 v_2^5 v_3^5", vst, "rho",
               [(v1, 1, v1 ** 2 * v2 ** 5 * v3 ** 5)])
    rec.arrows("d10/sigma-quotient/rho-v2", "sigma quotient", "rho: v_2 -> 1/v_2", vst, "rho", [(v2, 1, 1 / v2)])
    rec.arrows("d10/sigma-quotient/rho-v3", "sigma quotient", "rho: v_3 -> 1/(v_1 v_2^2 v_3^2)", vst, "rho",
               [(v3, 1, 1 / (v1 * v2 ** 2 * v3 ** 2))])
    rec.arrows("d10/sigma-quotient/tau-rho2", "sigma quotient", "tau rho^2 fixes v_1, v_2, v_3", vst, "tau*rho^2",
               [(v, 1, v) for v in (v1, v2, v3)], kind="invariance")
    e5 = eta(P)
    r5 = sqrt5_element()
    k = uspec.word_galois("tau*rho^2")
    zc = CyclotomicNumber.zeta(P)
    rec.add("d10/sigma-quotient/eta", "sigma quotient", "field-equality",
            "tau rho^2 acts on Q(zeta) as zeta -> zeta^-1 with fixed field Q(eta) = Q(sqrt 5)",
            k == P - 1 and e5.galois(k) == e5 and zc.galois(k) != zc
            and (zc * zc - e5 * zc + 1).is_zero() and r5 * r5 == CyclotomicNumber.rational(P, 5)
            and r5 == e5 * 2 + 1,
            {"galois exponent": k, "eta": e5, "sqrt5": r5, "sqrt5 = 1 + 2 eta": "checked"})

    # t, x, y
    TXY = Ring(["t", "x", "y"], P)
    t, x, yy = TXY.gens()
    s5 = TXY.const(r5)
    vspec = A.ActionSpec(V, {
        "tau": A.FieldAut(V, [1 / (v1 * v2 ** 5), v2, v2 / v3]),
        "rho": A.FieldAut(V, [v1 ** 2 * v2 ** 5 * v3 ** 5, 1 / v2, 1 / (v1 * v2 ** 2 * v3 ** 2)], 2)},
        ["rho^4", "tau^2", "rho*tau*rho^-1*tau^-1"], "tau, rho on v")
    tdefs = SubstitutionMap(TXY, V, [1 / v2, v1 * v2 * v3 ** 2, v3])
    tinv = SubstitutionMap(V, TXY, [x * t / yy ** 2, 1 / t, yy])
    rec.roundtrip("d10/txy/txy-change", "t, x, y", "Q(sqrt5)(v) = Q(sqrt5)(t, x, y), t = 1/v_2, "
                  "x = v_1 v_2 v_3^2, y = v_3", tdefs, tinv)
    tst = Stage(vspec, tdefs)
    rec.add("d10/txy/rho-sqrt5", "t, x, y", "identity", "rho: sqrt5 -> -sqrt5",
            r5.galois(2) == -r5, {"sqrt5": r5, "rho(sqrt5)": r5.galois(2)})
    rec.arrows("d10/txy/rho-t", "t, x, y", "rho: t -> 1/t", tst, "rho", [(t, 1, 1 / t)])
    rec.arrows("d10/txy/rho-chain", "t, x, y", "rho: x -> y -> t/x -> 1/(ty) -> x", tst, "rho",
               [(x, 1, yy), (yy, 1, t / x), (t / x, 1, 1 / (t * yy)), (1 / (t * yy), 1, x)])
    rec.arrows("d10/txy/rho2", "t, x, y", "rho^2: t -> t, x -> t/x, y -> 1/(ty)", tst, "rho^2",
               [(t, 1, t), (x, 1, t / x), (yy, 1, 1 / (t * yy))])
    rec.arrows("d10/txy/tau-txy", "t, x, y", "tau: t -> t, x -> t/x, y -> 1/(ty)", tst, "tau",
               [(t, 1, t), (x, 1, t / x), (yy, 1, 1 / (t * yy))])
    rho_t = A.FieldAut(TXY, [1 / t, yy, t / x], 2)
    txyspec = A.ActionSpec(TXY, {"rho": rho_t, "tau": A.FieldAut(TXY, [t, t / x, 1 / (t * yy)])},
                           ["rho^4", "tau^2", "rho*tau*rho^-1*tau^-1"], "tau, rho on t, x, y")
    B = Ring(["t"], P)
    uvres = D.involution_uv(B.var("t"), 1 / B.var("t"), ansatz_cap=min(ansatz_cap, 8), seed=seed)
    inv_s = uvres.involution
    rho2 = rho_t.power(2)
    same = all(rho2(g) == inv_s(g) for g in TXY.gens()) and s5.galois(rho2.k) == s5
    rec.add("d10/txy/rho2-linear", "t, x, y", "relation",
            "rho^2 agrees with x -> t/x, y -> 1/(ty) on Q(sqrt5)(t, x, y)", same,
            {"rho^2": rho2.describe(), "involution": inv_s.describe()})
    rec.descent("d10/txy/uv", "t, x, y", "Q(sqrt5)(t, x, y)^<rho^2> = Q(sqrt5)(t, u, v), "
                "a = t, b = 1/t", uvres.certificate, {"a": "t", "b": "1/t"},
                {f"expression {k}": e for k, e in uvres.expressions.items() if e is not None})
    u, v = uvres.u, uvres.v
    a, b = t, 1 / t

    # s, v, w
    q = a * yy / x - b * x / yy
    base = Stage.base(txyspec)
    rec.arrows("d10/svw/rho-u", "s, v, w", "rho: u -> (y - b/y)/(ay/x - bx/y)", base, "rho",
               [(u, 1, (yy - b / yy) / q)])
    rec.arrows("d10/svw/rho-v", "s, v, w", "rho: v -> -(x - a/x)/(ay/x - bx/y)", base, "rho",
               [(v, -1, (x - a / x) / q)])
    rep = D.verify_quotient_identity(100, seed)
    rec.add("d10/svw/quotient-identity", "s, v, w", "identity",
            "(x - a/x)/(ay/x - bx/y) = -u/(bu^2 - av^2) in Q(a, b, x, y)", rep.ok,
            {"formal": rep.formal, "specializations": rep.specializations,
             "excluded locus consistent": rep.excluded_locus_consistent},
            {f"failed point {i}": p for i, p in enumerate(rep.specialization_failures)})
    rec.equal("d10/svw/identity-instance", "s, v, w",
              "the quotient identity at a = t, b = 1/t", (x - a / x) / q, -u / (b * u ** 2 - a * v ** 2))
    TUV = Ring(["t", "u", "v"], P)
    TVW = Ring(["t", "v", "w"], P)
    tt, vv, ww = TVW.gens()
    rec.roundtrip("d10/svw/w-change", "s, v, w", "Q(sqrt5)(t, u, v) = Q(sqrt5)(t, v, w), "
                  "w = u/(tv)",
                  SubstitutionMap(TVW, TUV, [TUV.var("t"), TUV.var("v"),
                                             TUV.var("u") / (TUV.var("t") * TUV.var("v"))]),
                  SubstitutionMap(TUV, TVW, [tt, ww * tt * vv, vv]))
    w = u / (t * v)
    wst = Stage(txyspec, SubstitutionMap(TVW, TXY, [t, v, w]))
    lam = 1 / (ww - 1 / ww)
    rec.arrows("d10/svw/rho-w", "s, v, w", "rho: w -> -1/w", wst, "rho", [(ww, -1, 1 / ww)])
    rec.arrows("d10/svw/rho-v-lambda", "s, v, w", "rho: v -> lambda/v, lambda = 1/(w - 1/w)",
               wst, "rho", [(vv, 1, lam / vv)])
    sv = TVW.const(r5) * (1 + tt) / (1 - tt)
    rec.arrows("d10/svw/rho-s", "s, v, w", "rho(s) = s, s = sqrt5 (1 + t)/(1 - t)", wst, "rho",
               [(sv, 1, sv)], kind="invariance")
    SVW = Ring(["s", "v", "w"], P)
    ss, sv2, sw = SVW.gens()
    r5s = SVW.const(r5)
    rec.roundtrip("d10/svw/s-change", "s, v, w", "Q(sqrt5)(t, v, w) = Q(sqrt5)(s, v, w)",
                  SubstitutionMap(SVW, TVW, [sv, vv, ww]),
                  SubstitutionMap(TVW, SVW, [(ss - r5s) / (ss + r5s), sv2, sw]))
    rec.arrows("d10/svw/rho-lambda", "s, v, w", "rho(lambda) = lambda", wst, "rho",
               [(lam, 1, lam)], kind="invariance")

    # final pair
    VW = Ring(["v", "w"], P)
    pv, pw = VW.gens()
    vst6 = Stage(txyspec, SubstitutionMap(VW, TXY, [v, w]))
    lam6 = 1 / (pw - 1 / pw)
    rec.arrows("d10/final/vw-action", "final pair", "rho acts on Q(sqrt5)(v, w): w -> -1/w, "
               "v -> lambda/v", vst6, "rho", [(pw, -1, 1 / pw), (pv, 1, lam6 / pv)])
    rho6 = A.FieldAut(VW, [lam6 / pv, -1 / pw], 2)
    vwspec = A.ActionSpec(VW, {"rho": rho6}, ["rho^4"], "rho on v, w")
    alpha = VW.const(r5) - 2
    beta = 1 / (pw + 1)
    rec.equal("d10/final/alpha", "final pair", "alpha rho(alpha) = -1, alpha = sqrt5 - 2",
              alpha * rho6(alpha), VW.const(-1))
    rec.equal("d10/final/beta", "final pair", "beta rho(beta) = lambda, beta = 1/(w + 1)",
              beta * rho6(beta), lam6)
    VW2 = Ring(["V", "W"], P)
    cV, cW = VW2.gens()
    alpha2 = VW2.const(r5) - 2
    rec.roundtrip("d10/final/VW-change", "final pair", "Q(sqrt5)(v, w) = Q(sqrt5)(V, W), V = v/beta, "
                  "W = w/alpha",
                  SubstitutionMap(VW2, VW, [pv / beta, pw / alpha]),
                  SubstitutionMap(VW, VW2, [cV / (alpha2 * cW + 1), alpha2 * cW]))
    st6 = Stage(vwspec, SubstitutionMap(VW2, VW, [pv / beta, pw / alpha]))
    rec.arrows("d10/final/rho-V", "final pair", "rho(V) = 1/V", st6, "rho", [(cV, 1, 1 / cV)])
    rec.arrows("d10/final/rho-W", "final pair", "rho(W) = 1/W", st6, "rho", [(cW, 1, 1 / cW)])
    XY = Ring(["X", "Y"], P)
    cX, cY = XY.gens()
    rec.roundtrip("d10/final/XY-change", "final pair", "Q(sqrt5)(V, W) = Q(sqrt5)(X, Y), "
                  "X = (1 + V)/(1 - V), Y = (1 + W)/(1 - W)",
                  SubstitutionMap(XY, VW2, [(1 + cV) / (1 - cV), (1 + cW) / (1 - cW)]),
                  SubstitutionMap(VW2, XY, [(cX - 1) / (cX + 1), (cY - 1) / (cY + 1)]))
    Vf, Wf = pv / beta, pw / alpha
    Xf, Yf = (1 + Vf) / (1 - Vf), (1 + Wf) / (1 - Wf)
    xst = Stage(vwspec, SubstitutionMap(XY, VW, [Xf, Yf]))
    rec.arrows("d10/final/rho-X", "final pair", "rho(X) = -X", xst, "rho", [(cX, -1, cX)])
    rec.arrows("d10/final/rho-Y", "final pair", "rho(Y) = -Y", xst, "rho", [(cY, -1, cY)])
    r5x = XY.const(r5)
    rec.arrows("d10/final/sqrt5-X", "final pair", "rho(sqrt5 X) = sqrt5 X", xst, "rho",
               [(r5x * cX, 1, r5x * cX)], kind="invariance")
    rec.arrows("d10/final/sqrt5-Y", "final pair", "rho(sqrt5 Y) = sqrt5 Y", xst, "rho",
               [(r5x * cY, 1, r5x * cY)], kind="invariance")
    rec.add("d10/final/sqrt5-fixed", "final pair", "field-equality",
            "Q(sqrt5)^rho = Q: rho swaps +-sqrt5, whose min poly T^2 - 5 is rational",
            r5.galois(2) == -r5 and r5 != -r5 and (r5 * r5).is_rational(),
            {"min poly": "T^2 - 5"})
    return rec.finish()


def _linear_coeff(f, j):
    """Coefficient of the j-th variable in a linear polynomial."""
    R = f.ring
    if not f.is_polynomial():
        raise ValueError("expected a polynomial")
    e = tuple(1 if i == j else 0 for i in range(R.nvars))
    den = next(iter(f.den.values()))
    return f.num.get(e, R.K.zero) / den


def _tau_exponents(st: Stage, z):
    out = []
    K = st.ring.K
    for i in range(P):
        lhs = st.spec.apply_word("tau", st.lift(z[i]))
        hit = [e for e in range(P) if st.lift(z[mod_index(-i, P)]) * K.zeta(e) == lhs]
        out.append(f"z{i}: {hit[0] if hit else 'none'}")
    return out

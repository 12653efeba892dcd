"""Reduction from the regular representation of D_n to the n-dimensional
permutation span x_i = x(sigma^i) + x(sigma^i tau), and for n = 2m with m
odd the further split y_i = x_i - x_{m+i}, y'_i = x_i + x_{m+i}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import actions as A
from .. import descent as D
from ..actions import mod_index
from ..ratfield.ratfunc import Ring, SubstitutionMap
from .recorder import Recorder, Stage


@dataclass
class RegularResult:
    x_spec: A.ActionSpec  # D_n on x_0..x_{n-1}
    y_spec: A.ActionSpec | None  # D_n on y_0..y_{m-1} (even n only)
    x_stage: Stage
    y_stage: Stage | None


def regular_action(n: int) -> A.ActionSpec:
    """g . x(h) = x(gh) on variables xs_i = x(sigma^i), xt_i = x(sigma^i tau)."""
    R = Ring([f"xs{i}" for i in range(n)] + [f"xt{i}" for i in range(n)])
    s = A.FieldAut(R, {**{f"xs{i}": R.var(f"xs{mod_index(i + 1, n)}") for i in range(n)},
                       **{f"xt{i}": R.var(f"xt{mod_index(i + 1, n)}") for i in range(n)}})
    # tau sigma^i = sigma^-i tau and tau sigma^i tau = sigma^-i
    t = A.FieldAut(R, {**{f"xs{i}": R.var(f"xt{mod_index(-i, n)}") for i in range(n)},
                       **{f"xt{i}": R.var(f"xs{mod_index(-i, n)}") for i in range(n)}})
    return A.ActionSpec(R, {"sigma": s, "tau": t}, A.dihedral_relations(n), f"regular D{n}")


def permutation_action(n: int, names=None) -> A.ActionSpec:
    names = names or [f"x{i}" for i in range(n)]
    R = Ring(names)
    xs = R.gens()
    s = A.FieldAut(R, [xs[mod_index(i + 1, n)] for i in range(n)])
    t = A.FieldAut(R, [xs[mod_index(-i, n)] for i in range(n)])
    return A.ActionSpec(R, {"sigma": s, "tau": t}, A.dihedral_relations(n), f"D{n} on x")


def signed_action(n: int) -> A.ActionSpec:
    """D_n on y_0..y_{m-1}, n = 2m: sigma shifts with y_{m-1} -> -y_0, tau: y_i -> -y_{-i}, y_0 fixed."""
    m = n // 2
    R = Ring([f"y{i}" for i in range(m)])
    ys = R.gens()
    s = A.FieldAut(R, [ys[i + 1] if i < m - 1 else -ys[0] for i in range(m)])
    t = A.FieldAut(R, [ys[0]] + [-ys[mod_index(-i, m)] for i in range(1, m)])
    return A.ActionSpec(R, {"sigma": s, "tau": t}, A.dihedral_relations(n), f"D{n} on y")


def split_action(n: int) -> A.ActionSpec:
    """D_n on (y, y'): the signed action on y and the permutation action on y'."""
    m = n // 2
    R = Ring([f"y{i}" for i in range(m)] + [f"yp{i}" for i in range(m)])
    y = [R.var(f"y{i}") for i in range(m)]
    yp = [R.var(f"yp{i}") for i in range(m)]
    s = A.FieldAut(R, [y[i + 1] if i < m - 1 else -y[0] for i in range(m)]
                   + [yp[mod_index(i + 1, m)] for i in range(m)])
    t = A.FieldAut(R, [y[0]] + [-y[mod_index(-i, m)] for i in range(1, m)]
                   + [yp[mod_index(-i, m)] for i in range(m)])
    return A.ActionSpec(R, {"sigma": s, "tau": t}, A.dihedral_relations(n), f"D{n} on y, y'")


def complement_action(n: int) -> A.ActionSpec:
    """D_n on (x_i, xs_i) after replacing xt_i by x_i - xs_i."""
    R = Ring([f"x{i}" for i in range(n)] + [f"xs{i}" for i in range(n)])
    x = [R.var(f"x{i}") for i in range(n)]
    g = [R.var(f"xs{i}") for i in range(n)]
    s = A.FieldAut(R, [x[mod_index(i + 1, n)] for i in range(n)]
                   + [g[mod_index(i + 1, n)] for i in range(n)])
    t = A.FieldAut(R, [x[mod_index(-i, n)] for i in range(n)]
                   + [x[mod_index(-i, n)] - g[mod_index(-i, n)] for i in range(n)])
    return A.ActionSpec(R, {"sigma": s, "tau": t}, A.dihedral_relations(n), f"D{n} on x, xs")


def regular_reduction(n: int, rec: Recorder, seed: int = 0) -> RegularResult:
    """Record the regular-representation reduction for D_n; returns the reduced actions."""
    if n < 3:
        raise ValueError("n must be at least 3")
    p = f"reg{n}"
    reg = regular_action(n)
    rec.presentation(f"{p}/regular-presentation", "regular", f"D{n} relations on x(g)", reg)

    xspec = permutation_action(n)
    X = xspec.ring
    defs = SubstitutionMap(X, reg.ring, [reg.ring.var(f"xs{i}") + reg.ring.var(f"xt{i}")
                                         for i in range(n)])
    xst = Stage(reg, defs)
    xv = X.gens()
    rec.arrows(f"{p}/sigma-x", "regular", "sigma: x_i -> x_{i+1}, x_{n-1} -> x_0", xst, "sigma",
               [(xv[i], 1, xv[mod_index(i + 1, n)]) for i in range(n)])
    rec.arrows(f"{p}/tau-x", "regular", "tau: x_i -> x_{-i}", xst, "tau",
               [(xv[i], 1, xv[mod_index(-i, n)]) for i in range(n)])
    rec.presentation(f"{p}/x-presentation", "regular", f"D{n} relations on the x-span", xspec)
    order = len(xspec.elements())
    rec.add(f"{p}/x-faithful", "regular", "relation", f"the x-span is faithful: {2 * n} elements",
            order == 2 * n, {"group order": order})

    # affine descent over the complement: coordinates (x_i, xs_i)
    comp = complement_action(n)
    C = comp.ring
    fwd = SubstitutionMap(C, reg.ring, [reg.ring.var(f"xs{i}") + reg.ring.var(f"xt{i}")
                                        for i in range(n)] + [reg.ring.var(f"xs{i}")
                                                              for i in range(n)])
    inv = SubstitutionMap(reg.ring, C, [C.var(f"xs{i}") for i in range(n)]
                          + [C.var(f"x{i}") - C.var(f"xs{i}") for i in range(n)])
    rec.roundtrip(f"{p}/complement-change", "regular", "Q(x(g)) = Q(x_i, x(sigma^i))", fwd, inv)
    cst = Stage(reg, fwd)
    cv = {v: C.var(v) for v in C.variables}
    rec.arrows(f"{p}/complement-sigma", "regular", "sigma: x(sigma^i) -> x(sigma^{i+1})", cst,
               "sigma", [(cv[f"xs{i}"], 1, cv[f"xs{mod_index(i + 1, n)}"]) for i in range(n)])
    rec.arrows(f"{p}/complement-tau", "regular", "tau: x(sigma^i) -> x_{-i} - x(sigma^{-i})", cst,
               "tau", [(cv[f"xs{i}"], 1, cv[f"x{mod_index(-i, n)}"] - cv[f"xs{mod_index(-i, n)}"])
                       for i in range(n)])
    res = D.trivialize_affine(comp, [f"xs{i}" for i in range(n)], seed=seed,
                              names=[f"q{i}" for i in range(n)])
    rec.descent(f"{p}/complement-descent", "regular",
                "Q(x(g))^G = Q(x_i)^G(q_0..q_{n-1}) with q fixed", res.certificate,
                {"fibre": "x(sigma^i)", "attempts": res.attempts})

    if n % 2 or (n // 2) % 2 == 0:
        return RegularResult(xspec, None, xst, None)

    m = n // 2
    split = split_action(n)
    Ysp = split.ring
    ydefs = SubstitutionMap(Ysp, X, [xv[i] - xv[m + i] for i in range(m)]
                            + [xv[i] + xv[m + i] for i in range(m)])
    yinv_images = []
    for j in range(n):
        i = mod_index(j, m)
        yi, ypi = Ysp.var(f"y{i}"), Ysp.var(f"yp{i}")
        yinv_images.append((ypi + yi) / 2 if j < m else (ypi - yi) / 2)
    yinv = SubstitutionMap(X, Ysp, yinv_images)
    rec.roundtrip(f"{p}/y-change", "split", "Q(x_i) = Q(y_i, y'_i)", ydefs, yinv)
    yst = Stage(xspec, ydefs)
    y = [Ysp.var(f"y{i}") for i in range(m)]
    yp = [Ysp.var(f"yp{i}") for i in range(m)]
    rec.arrows(f"{p}/sigma-y", "split", "sigma: y_0 -> y_1 -> ... -> y_{m-1}", yst, "sigma",
               [(y[i], 1, y[i + 1]) for i in range(m - 1)])
    rec.arrows(f"{p}/sigma-y-last", "split", "sigma: y_{m-1} -> -y_0", yst, "sigma",
               [(y[m - 1], -1, y[0])])
    rec.arrows(f"{p}/sigma-yp", "split", "sigma: y'_0 -> y'_1 -> ... -> y'_{m-1} -> y'_0", yst,
               "sigma", [(yp[i], 1, yp[mod_index(i + 1, m)]) for i in range(m)])
    rec.arrows(f"{p}/tau-y0", "split", "tau: y_0 -> y_0", yst, "tau", [(y[0], 1, y[0])])
    rec.arrows(f"{p}/tau-yp0", "split", "tau: y'_0 -> y'_0", yst, "tau", [(yp[0], 1, yp[0])])
    rec.arrows(f"{p}/tau-y", "split", "tau: y_i -> -y_{-i} for i != 0", yst, "tau",
               [(y[i], -1, y[mod_index(-i, m)]) for i in range(1, m)])
    rec.arrows(f"{p}/tau-yp", "split", "tau: y'_i -> y'_{-i}", yst, "tau",
               [(yp[i], 1, yp[mod_index(-i, m)]) for i in range(m)])
    yspec = signed_action(n)
    rec.presentation(f"{p}/y-presentation", "split",
                     f"D{n} relations on the y-span, sigma^{m} = -1 there", yspec,
                     expect_fail=[f"sigma^{m}"])
    neg = yspec.apply_word(f"sigma^{m}", yspec.ring.var("y0")) == -yspec.ring.var("y0")
    rec.add(f"{p}/y-sigma-m", "split", "semi-invariance", f"sigma^{m} acts as -1 on the y-span",
            neg and all(yspec.apply_word(f"sigma^{m}", v) == -v for v in yspec.ring.gens()))
    # affine descent for the y' fibre over Q(y)
    res = D.trivialize_affine(split, [f"yp{i}" for i in range(m)], seed=seed,
                              names=[f"r{i}" for i in range(m)])
    rec.descent(f"{p}/yp-descent", "split", "Q(y, y')^G = Q(y)^G(r_0..r_{m-1}) with r fixed",
                res.certificate, {"fibre": "y'", "attempts": res.attempts})
    ystage = Stage(xspec, SubstitutionMap(yspec.ring, X, [xv[i] - xv[m + i] for i in range(m)]))
    return RegularResult(xspec, yspec, xst, ystage)

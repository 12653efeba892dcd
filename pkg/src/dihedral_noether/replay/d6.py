"""Replay for D_6: reduction to Q(y_0, y_1, y_2), ratios z_1, z_2, descent for
y_0 and a searched generating pair for the monomial action on (z_1, z_2)."""

from __future__ import annotations

from .. import actions as A
from .. import descent as D
from ..ratfield.ratfunc import Ring, SubstitutionMap
from .recorder import Recorder, Stage
from .regular import regular_reduction


def is_monomial(f) -> bool:
    return len(f.num) == 1 and len(f.den) == 1


def replay_d6(seed: int = 0, bound: int = 3, ansatz_cap: int = 32):
    rec = Recorder("d6", seed, {"search_bound": bound, "ansatz_cap": ansatz_cap})
    reg = regular_reduction(6, rec, seed)
    yspec, ystage = reg.y_spec, reg.y_stage
    Y = yspec.ring
    y0, y1, y2 = Y.gens()
    rec.arrows("d6/recall-sigma", "Y", "sigma: y_0 -> y_1 -> y_2 -> -y_0", ystage, "sigma",
               [(y0, 1, y1), (y1, 1, y2), (y2, -1, y0)])
    rec.arrows("d6/recall-tau", "Y", "tau: y_0 -> y_0, y_1 -> -y_2, y_2 -> -y_1", ystage, "tau",
               [(y0, 1, y0), (y1, -1, y2), (y2, -1, y1)])

    Z = Ring(("y0", "z1", "z2"))
    w0, z1, z2 = Z.gens()
    zdefs = SubstitutionMap(Z, Y, [y0, y1 / y0, y2 / y1])
    zinv = SubstitutionMap(Y, Z, [w0, w0 * z1, w0 * z1 * z2])
    rec.roundtrip("d6/z-change", "Z", "Q(y_0, y_1, y_2) = Q(y_0, z_1, z_2)", zdefs, zinv)
    st = Stage(yspec, zdefs)
    rec.arrows("d6/sigma-y0", "Z", "sigma: y_0 -> y_0 z_1", st, "sigma", [(w0, 1, w0 * z1)])
    rec.arrows("d6/sigma-z1", "Z", "sigma: z_1 -> z_2", st, "sigma", [(z1, 1, z2)])
    rec.arrows("d6/sigma-z2", "Z", "sigma: z_2 -> -1/(z_1 z_2)", st, "sigma",
               [(z2, -1, 1 / (z1 * z2))])
    rec.arrows("d6/tau-y0", "Z", "tau: y_0 -> y_0", st, "tau", [(w0, 1, w0)])
    rec.arrows("d6/tau-z1", "Z", "tau: z_1 -> -z_1 z_2", st, "tau", [(z1, -1, z1 * z2)])
    rec.arrows("d6/tau-z2", "Z", "tau: z_2 -> 1/z_2", st, "tau", [(z2, 1, 1 / z2)])

    sig = A.FieldAut(Z, [w0 * z1, z2, -1 / (z1 * z2)])
    tau = A.FieldAut(Z, [w0, -z1 * z2, 1 / z2])
    zspec = A.ActionSpec(Z, {"sigma": sig, "tau": tau}, A.dihedral_relations(6), "D6 on y0, z")
    rec.presentation("d6/z-presentation", "Z", "D6 relations on (y_0, z_1, z_2)", zspec)

    line = D.line_descent(zspec, "y0", seed=seed, ansatz_cap=ansatz_cap)
    rec.descent("d6/y0-descent", "Z", "Q(y_0, z_1, z_2)^G = Q(z_1, z_2)^G(y~)", line.certificate,
                {"kernel order": line.kernel_order, "reduced": line.reduced,
                 "attempts": line.attempts})

    S = Ring(("z1", "z2"))
    a, b = S.gens()
    s2 = A.FieldAut(S, [b, -1 / (a * b)])
    t2 = A.FieldAut(S, [-a * b, 1 / b])
    mspec = A.ActionSpec(S, {"sigma": s2, "tau": t2}, A.dihedral_relations(6), "D6 on z")
    rec.add("d6/monomial-form", "Z", "relation", "sigma, tau act on (z_1, z_2) by monomials",
            all(is_monomial(im) for g in (s2, t2) for im in g.images),
            {"sigma": s2.describe(), "tau": t2.describe()})
    found = D.monomial_fixed_2var(mspec, bound, ansatz_cap=ansatz_cap, seed=seed)
    if found:
        cert = found.certificate
        extra = {f"expression {k}": v for k, v in found.expressions.items() if v is not None}
        extra["group order"] = found.group_order
        extra["pairs tried"] = found.pairs_tried
    else:
        cert = D.InvariantCertificate([])
        cert.add("invariance", "search", False, found.reason)
        cert.add("field-equality", "search", False, found.reason)
        extra = {}
    rec.descent("d6/monomial-search", "Z", "Q(z_1, z_2)^G = Q(f, g)", cert, {"bound": bound},
                extra)
    return rec.finish()

"""Core suite: the quotient identity, the involution certifier on fixed and
random instances, and the character-lattice witnesses, independent of the
dihedral replays.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .. import descent as D
from .. import lattice as LT
from ..ratfield.ratfunc import Ring, transfer
from .d9 import y_action as d9_y_action
from .recorder import Recorder

RANDOM_INSTANCES = 20


def _random_rational(rng: random.Random) -> Fraction:
    while True:
        q = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        if q:
            return q


def replay_core(seed: int = 0, bound: int = 3, ansatz_cap: int = 32):
    rec = Recorder("core", seed, {"search_bound": bound, "ansatz_cap": ansatz_cap})
    cap = min(ansatz_cap, 8)

    rep = D.verify_quotient_identity(100, seed)
    rec.add("core/quotient-identity", "identity", "identity",
            "(x - a/x)/(ay/x - bx/y) = -u/(bu^2 - av^2) in Q(a, b, x, y)", rep.ok,
            {"formal": rep.formal, "specializations": rep.specializations,
             "excluded locus consistent": rep.excluded_locus_consistent},
            {f"failed point {i}": p for i, p in enumerate(rep.specialization_failures)})

    Q0 = Ring(())
    res = D.involution_uv(Q0.const(1), Q0.const(1), ansatz_cap=cap, seed=seed)
    rec.descent("core/involution-unit", "involution", "Q(x, y)^s for x -> 1/x, y -> 1/y",
                res.certificate, {"a": 1, "b": 1})

    T = Ring(["t"], 5)
    t = T.var("t")
    res = D.involution_uv(t, 1 / t, ansatz_cap=cap, seed=seed)
    rec.descent("core/involution-t", "involution",
                "Q(sqrt5)(t)(x, y)^s for x -> t/x, y -> 1/(ty)", res.certificate,
                {"a": "t", "b": "1/t"})

    rng = random.Random(seed)
    merged = D.InvariantCertificate([])
    pairs = []
    for i in range(RANDOM_INSTANCES):
        a, b = _random_rational(rng), _random_rational(rng)
        pairs.append(f"({a}, {b})")
        r = D.involution_uv(Q0.const(a), Q0.const(b), ansatz_cap=cap, seed=seed + i)
        merged.generators.extend([r.u, r.v])
        for c in r.certificate.checks:
            merged.checks.append(D.Check(c.kind, f"#{i} {c.label}", c.ok, c.detail, {}))
    rec.descent("core/involution-random", "involution",
                f"the involution certifier on {RANDOM_INSTANCES} random rational (a, b)",
                merged, {"pairs": pairs})

    L = LT.kernel_lattice()
    rec.add("core/kernel-index", "lattice", "lattice-witness", "[Lambda : M] = 9",
            L.index == 9 and L.rho_closed(), {"index": L.index})
    wit = LT.find_free_generator(bound, L)
    ok = bool(wit) and abs(wit.determinant) == 1 and wit.determinant == wit.oracle_determinant
    rec.add("core/free-generator", "lattice", "lattice-witness",
            "a free generator of M exists with orbit determinant +-1",
            ok, {"bound": bound},
            {"determinant": wit.determinant, "oracle determinant": wit.oracle_determinant,
             "examined": wit.examined, "exponents": list(wit.generator.coeffs)} if wit
            else {"examined": wit.examined})
    if wit:
        yspec = d9_y_action()
        z0 = transfer(LT.monomial_from_exponents(wit.generator), yspec.ring)
        rec.fixed("core/generator-fixed", "lattice", "sigma fixes the generator monomial", yspec,
                  "sigma", [z0])
    else:
        rec.add("core/generator-fixed", "lattice", "invariance",
                "sigma fixes the generator monomial", False, {}, {"reason": "no generator"})
    return rec.finish()

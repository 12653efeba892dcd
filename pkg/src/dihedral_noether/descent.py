"""Constructive descent: affine and one-variable cocycle trivialization, the
involution invariants u, v, the identity relating them under rho, and a
bounded search for invariants of two-variable monomial actions.

Every routine returns its invariants together with an ``InvariantCertificate``
whose checks are exact and can be replayed from the rendered witnesses.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import actions as A
from .ratfield import linalg
from .ratfield import poly as P
from .ratfield.ratfunc import RatFunc, Ring, SubstitutionMap, partial, transfer
from .ratfield.solve import (NotFound, ansatz_escalate, ansatz_membership, orbit_min_poly,
                             roundtrip_check)

RETRY_CAP = 64
SCHEDULE = (4, 8, 16, 32)


class DescentError(RuntimeError):
    """Retries exhausted or a precondition failed; carries the reason."""


@dataclass
class Check:
    kind: str
    label: str
    ok: bool
    detail: str = ""
    witness: dict = field(default_factory=dict)


@dataclass
class InvariantCertificate:
    generators: list[RatFunc]
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, kind, label, ok, detail="", **witness) -> bool:
        self.checks.append(Check(kind, label, bool(ok), detail, {k: str(v) for k, v in witness.items()}))
        return bool(ok)


# -- shared helpers ------------------------------------------------------------------

def fibre_split(ring: Ring, fibre: Sequence[str]) -> tuple[list[str], list[str]]:
    fibre = list(fibre)
    for v in fibre:
        ring.index(v)
    return [v for v in ring.variables if v not in fibre], fibre


def affine_parts(f: RatFunc, fibre: Sequence[str]) -> tuple[list[RatFunc], RatFunc] | None:
    """Write f = sum_j a_j x_j + b with a_j, b free of the fibre variables."""
    R = f.ring
    idx = [R.index(v) for v in fibre]
    if any(P.degree_in(f.den, i) > 0 for i in idx):
        return None
    parts: dict[int | None, dict] = {}
    for e, c in f.num.items():
        degs = [e[i] for i in idx]
        tot = sum(degs)
        if tot > 1:
            return None
        if tot == 0:
            parts.setdefault(None, {})[e] = c
        else:
            j = degs.index(1)
            e2 = list(e)
            e2[idx[j]] = 0
            parts.setdefault(j, {})[tuple(e2)] = c
    coeffs = [R.from_polys(parts.get(j, {}), f.den) for j in range(len(idx))]
    return coeffs, R.from_polys(parts.get(None, {}), f.den)


def kernel_on_base(G: Sequence[A.FieldAut], base: Sequence[str]) -> list[A.FieldAut]:
    """Group elements acting trivially on the base field (variables and zeta)."""
    out = []
    for g in G:
        R = g.ring
        n = max(R.order, 1)
        if n > 1 and g.k % n != 1:
            continue
        if all(g(R.var(v)) == R.var(v) for v in base):
            out.append(g)
    return out


def reynolds(G: Sequence[A.FieldAut], f: RatFunc) -> RatFunc:
    acc = f.ring.zero()
    for g in G:
        acc = acc + g(f)
    return acc / len(G)


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _pool_scalar(rng: random.Random, ring: Ring):
    # small integer times a power of zeta, so constant pools still separate Galois orbits
    c = ring.K.convert(rng.choice([1, 2, 3, -1, -2, -3]))
    if ring.order > 1:
        c = c * ring.K.zeta(rng.randrange(ring.order))
    return c


def pool_element(rng: random.Random, ring: Ring, base: Sequence[str], degree: int,
                 terms: int = 3) -> RatFunc:
    """Random low-degree polynomial in the base variables with small coefficients."""
    if degree == 0 or not base:
        return ring.const(_pool_scalar(rng, ring) + _pool_scalar(rng, ring))
    idx = [ring.index(v) for v in base]
    monos = _monomials(len(idx), degree)
    num = {}
    for _ in range(terms):
        m = rng.choice(monos)
        e = [0] * ring.nvars
        for i, k in zip(idx, m):
            e[i] = k
        num[tuple(e)] = _pool_scalar(rng, ring)
    return ring.from_polys({k: c for k, c in num.items() if c})


def _pool_degree(attempt: int) -> int:
    return min(attempt // 2, 3)


def random_base_point(rng: random.Random, ring: Ring) -> list[Fraction]:
    return [Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(ring.nvars)]


def nonzero_witness(f_matrix: list[list[RatFunc]], rng: random.Random, tries: int = 4):
    """Point where det(matrix) is provably nonzero (an exact nonzero value), or None."""
    if not f_matrix:
        return None
    R = f_matrix[0][0].ring
    for _ in range(tries):
        pt = random_base_point(rng, R)
        try:
            vals = [[e.evaluate(pt) for e in row] for row in f_matrix]
        except ZeroDivisionError:
            continue
        d = linalg.determinant(vals)
        if d:
            return pt, d
    return None


# -- affine descent ---------------------------------------------------------

@dataclass
class AffineCocycle:
    """A(g), B(g) for every group element g, with g(x) = A(g) x + B(g)."""

    ring: Ring
    fibre: list[str]
    elements: list[A.FieldAut]
    A: dict
    B: dict

    def law_failures(self, generators: Sequence[A.FieldAut]) -> list[str]:
        """Check A(gh) = g(A(h)) A(g) and B(gh) = g(A(h)) B(g) + g(B(h)) for g a generator."""
        bad = []
        keys = {h.key(): h for h in self.elements}
        for g in generators:
            for h in self.elements:
                gh = (g * h).key()
                if gh not in keys:
                    bad.append("group not closed")
                    continue
                gA = [[g(a) for a in row] for row in self.A[h.key()]]
                lhs = linalg.matmul(gA, self.A[g.key()])
                if lhs != self.A[gh]:
                    bad.append(f"A-law fails for {g.name}")
                gB = linalg.matvec(gA, self.B[g.key()])
                gB = [x + g(y) for x, y in zip(gB, self.B[h.key()])]
                if gB != self.B[gh]:
                    bad.append(f"B-law fails for {g.name}")
        return bad


def affine_cocycle(spec: A.ActionSpec, fibre: Sequence[str], elements=None) -> AffineCocycle:
    R = spec.ring
    base, fibre = fibre_split(R, fibre)
    G = elements or spec.elements()
    As, Bs = {}, {}
    for g in G:
        rowsA, colB = [], []
        for v in fibre:
            parts = affine_parts(g(R.var(v)), fibre)
            if parts is None:
                raise DescentError(f"action of {g.describe()} on {v} is not affine in {fibre}")
            rowsA.append(parts[0])
            colB.append(parts[1])
        As[g.key()] = rowsA
        Bs[g.key()] = colB
    return AffineCocycle(R, fibre, G, As, Bs)


@dataclass
class AffineResult:
    invariants: list[RatFunc]  # z_i in the original ring
    matrix: list[list[RatFunc]]  # M with z = M x + e
    shift: list[RatFunc]
    new_ring: Ring
    forward: SubstitutionMap  # new ring -> old ring
    inverse: SubstitutionMap | None  # old ring -> new ring, when built symbolically
    attempts: int
    certificate: InvariantCertificate


def trivialize_affine(spec: A.ActionSpec, fibre: Sequence[str], seed: int = 0,
                      names: Sequence[str] | None = None, retry_cap: int = RETRY_CAP,
                      symbolic_limit: int = 60) -> AffineResult:
    """Invariant coordinates z for an affine action on the fibre variables.

    z = Reynolds average of C x for a random matrix C over the base field;
    then z = M x + e with M = avg_h h(C) A(h), and det M != 0 gives
    L(x) = L(z).  The certificate checks invariance of each z_i, the affine
    decomposition, and L(x) = L(z): by a symbolic roundtrip when M is small
    (total terms <= symbolic_limit) or constant, otherwise by an exact nonzero value of
    det M at a rational point.
    """
    R = spec.ring
    base, fibre = fibre_split(R, fibre)
    m = len(fibre)
    names = list(names or [f"{v}_inv" for v in fibre])
    G = spec.elements()
    N = [g for g in kernel_on_base(G, base) if not g.is_identity()]
    if N:
        raise DescentError("the group does not act faithfully on the base field")
    cocycle = affine_cocycle(spec, fibre, G)
    law = cocycle.law_failures(list(spec.generators.values()))
    rng = random.Random(seed)
    xs = [R.var(v) for v in fibre]
    for attempt in range(retry_cap):
        deg = _pool_degree(attempt)
        C = [[pool_element(rng, R, base, deg) for _ in range(m)] for _ in range(m)]
        z = []
        for i in range(m):
            f = R.zero()
            for j in range(m):
                f = f + C[i][j] * xs[j]
            z.append(reynolds(G, f))
        decomposed = [affine_parts(zi, fibre) for zi in z]
        M = [d[0] for d in decomposed]
        e = [d[1] for d in decomposed]
        wit = nonzero_witness(M, rng)
        if wit is not None:
            break
    else:
        raise DescentError(f"no invertible averaging matrix after {retry_cap} attempts")

    cert = InvariantCertificate(z)
    cert.add("invariance", "cocycle law", not law, "; ".join(law))
    for name, zi in zip(names, z):
        for gname, g in spec.generators.items():
            cert.add("invariance", f"{gname}({name}) = {name}", g(zi) == zi, invariant=zi)
    rebuilt_ok = all(
        sum((M[i][j] * xs[j] for j in range(m)), R.zero()) + e[i] == z[i] for i in range(m))
    cert.add("field-equality", "z = M x + e", rebuilt_ok)

    new = Ring(base + names, R.order)
    fwd_images = {v: R.var(v) for v in base}
    fwd_images.update({n: zi for n, zi in zip(names, z)})
    forward = SubstitutionMap(new, R, fwd_images)
    inverse = None
    size = sum(len(a.num) + len(a.den) for row in M for a in row)
    if size <= symbolic_limit or all(a.is_constant() for row in M for a in row):
        Mn = [[transfer(a, new) for a in row] for row in M]
        Minv = linalg.inverse(Mn, new.one(), new.zero())
        rhs = [new.var(n) - transfer(ei, new) for n, ei in zip(names, e)]
        xs_new = linalg.matvec(Minv, rhs)
        inv_images = {v: new.var(v) for v in base}
        inv_images.update({v: xn for v, xn in zip(fibre, xs_new)})
        inverse = SubstitutionMap(R, new, inv_images)
        rt = roundtrip_check(forward, inverse)
        cert.add("field-equality", "L(x) = L(z) by roundtrip", rt.ok, "; ".join(rt.failures))
    else:
        pt, d = wit
        cert.add("field-equality", "L(x) = L(z) by det M != 0", bool(d),
                 point=[str(p) for p in pt], determinant=d)
    return AffineResult(z, M, e, new, forward, inverse, attempt + 1, cert)


# -- line descent --------------------------------------------------------------

@dataclass
class LineResult:
    invariant: RatFunc  # in the original ring
    reduced: RatFunc  # x' (x itself, or (x - x*)^|N| when a kernel acts)
    kernel_order: int
    multiplier: RatFunc  # Hilbert 90 element c (in the base field)
    shift: RatFunc  # e with invariant = c x' + e
    attempts: int
    certificate: InvariantCertificate
    ring_reduced: Ring  # base + placeholder for x'


def line_descent(spec: A.ActionSpec, var: str, seed: int = 0, retry_cap: int = RETRY_CAP,
                 placeholder: str | None = None, ansatz_cap: int = 32) -> LineResult:
    """Invariant x~ = c x' + e generating L(x)^G over L^G.

    Elements acting trivially on the base field form a cyclic group N acting
    on x by roots of unity about a common fixed point x*; they are absorbed
    first via x' = (x - x*)^|N|.  Then c = sum_h a_h h(d) (Hilbert 90) and e
    averages the remaining additive cocycle.
    """
    R = spec.ring
    base, _ = fibre_split(R, [var])
    G = spec.elements()
    cert = InvariantCertificate([])
    x = R.var(var)
    coeff = {}
    for g in G:
        parts = affine_parts(g(x), [var])
        if parts is None:
            raise DescentError(f"action of {g.describe()} on {var} is not affine")
        coeff[g.key()] = (parts[0][0], parts[1])
    N = kernel_on_base(G, base)
    reduced = x
    if len(N) > 1:
        gN = next((g for g in N if coeff[g.key()][0] != 1), None)
        if gN is None:
            raise DescentError("kernel elements act by translations")
        a, b = coeff[gN.key()]
        xstar = b / (1 - a)
        x0 = x - xstar
        fixed_ok = all(g(x0) == x0 * coeff[g.key()][0] for g in N)
        cert.add("semi-invariance", "kernel acts by scalars about x*", fixed_ok, xstar=xstar)
        reduced = x0 ** len(N)
        mp = orbit_min_poly(x, N)
        cert.add("invariance", f"orbit of {var} under the kernel", mp.invariant and mp.degree == len(N),
                 "; ".join(mp.failures), degree=mp.degree)
        gens = [R.var(v) for v in base] + [reduced]
        gnames = base + ["xp"]
        for i, c in enumerate(mp.coefficients[:-1]):
            res, tried = ansatz_escalate(c, gens, cap=ansatz_cap, names=gnames, seed=seed)
            cert.add("field-equality", f"kernel min-poly coefficient T^{i} in L(x')", bool(res),
                     "" if res else res.reason, expression=res.expression if res else "")
    ph = placeholder or f"{var}p"
    Pring = Ring(base + [ph], R.order)
    xp = Pring.var(ph)
    # action on x' expressed in the placeholder ring
    gens_P = {}
    for gname, g in spec.generators.items():
        im = g(reduced)
        ratio = im / reduced
        parts = affine_parts(im, [var]) if reduced is x else None
        if reduced is x:
            a_g, b_g = parts[0][0], parts[1]
        else:
            if var in ratio.variables_used():
                raise DescentError(f"{gname} does not act on x' by a base scalar")
            a_g, b_g = ratio, R.zero()
        imgs = {v: transfer(g(R.var(v)), Pring) for v in base}
        imgs[ph] = transfer(a_g, Pring) * xp + transfer(b_g, Pring)
        gens_P[gname] = A.FieldAut(Pring, imgs, g.k, gname)
    specP = A.ActionSpec(Pring, gens_P, (), spec.name + "/reduced")
    GP = specP.elements()
    aP = {}
    for h in GP:
        parts = affine_parts(h(xp), [ph])
        aP[h.key()] = (parts[0][0], parts[1])
    rng = random.Random(seed)
    cP = None
    for attempt in range(retry_cap):
        d = pool_element(rng, Pring, base, _pool_degree(attempt))
        cP = Pring.zero()
        for h in GP:
            cP = cP + aP[h.key()][0] * h(d)
        if cP:
            break
    else:
        raise DescentError(f"Hilbert 90 element vanished for {retry_cap} draws")
    # additive part: g(c x') = c x' + beta_g
    betas = [h(cP * xp) - cP * xp for h in GP]
    eP = sum(betas, Pring.zero()) / len(GP)
    inv_P = cP * xp + eP
    for gname, g in gens_P.items():
        cert.add("invariance", f"Hilbert 90: {gname}(c) = c / a_{gname}",
                 g(cP) == cP / aP[g.key()][0], multiplier=cP)
        cert.add("invariance", f"{gname} fixes the reduced invariant", g(inv_P) == inv_P)
    back = SubstitutionMap(Pring, R, {**{v: R.var(v) for v in base}, ph: reduced})
    invariant = back(inv_P)
    for gname, g in spec.generators.items():
        cert.add("invariance", f"{gname} fixes the invariant", g(invariant) == invariant,
                 invariant=invariant)
    # degree-1 roundtrip between L(x') and L(x~)
    tn = f"{var}_inv"
    Q = Ring(base + [tn], R.order)
    fwd = SubstitutionMap(Q, Pring, {**{v: Pring.var(v) for v in base}, tn: inv_P})
    inv = SubstitutionMap(Pring, Q, {**{v: Q.var(v) for v in base},
                                     ph: (Q.var(tn) - transfer(eP, Q)) / transfer(cP, Q)})
    rt = roundtrip_check(fwd, inv)
    cert.add("field-equality", "L(x') = L(x~) by roundtrip", rt.ok, "; ".join(rt.failures))
    cert.generators = [invariant]
    cmult = back(cP)
    return LineResult(invariant, reduced, len(N), cmult, back(eP), attempt + 1, cert, Pring)


# -- involution certifier ---------------------------------------------------

@dataclass
class InvolutionResult:
    u: RatFunc
    v: RatFunc
    ring: Ring
    involution: A.FieldAut
    certificate: InvariantCertificate
    min_poly: list[RatFunc]
    expressions: dict


def uv_formulas(x, y, a, b):
    """The invariants u, v of the involution: (x - a/x)/(xy - ab/(xy)), (y - b/y)/(xy - ab/(xy))."""
    den = x * y - a * b / (x * y)
    return (x - a / x) / den, (y - b / y) / den


def involution_uv(a: RatFunc, b: RatFunc, x_name: str = "x", y_name: str = "y",
                  ansatz_cap: int = 8, seed: int = 0) -> InvolutionResult:
    """Invariants of x -> a/x, y -> b/y over the base field of a and b."""
    base_ring = a.ring
    if b.ring is not base_ring:
        raise ValueError("a and b must lie in the same field")
    if not a or not b:
        raise DescentError("a and b must be nonzero")
    R = Ring(list(base_ring.variables) + [x_name, y_name], base_ring.order)
    aR, bR = transfer(a, R), transfer(b, R)
    x, y = R.var(x_name), R.var(y_name)
    if x * y * x * y == aR * bR:
        raise DescentError("degenerate denominator")
    u, v = uv_formulas(x, y, aR, bR)
    s = A.FieldAut(R, {x_name: aR / x, y_name: bR / y}, 1, "s")
    cert = InvariantCertificate([u, v])
    cert.add("invariance", "s(u) = u", s(u) == u, u=u)
    cert.add("invariance", "s(v) = v", s(v) == v, v=v)
    cert.add("relation", "s^2 = 1", (s * s).is_identity())
    cert.add("invariance", "x not fixed by s", s(x) != x)
    mp = orbit_min_poly(x, [A.FieldAut.identity(R), s])
    cert.add("invariance", "min-poly of x has invariant coefficients", mp.invariant,
             "; ".join(mp.failures), degree=mp.degree)
    cert.add("field-equality", "x is quadratic over the fixed field", mp.degree == 2)
    base_gens = [R.var(vn) for vn in base_ring.variables]
    base_names = list(base_ring.variables)
    exprs = {}
    for i, c in enumerate(mp.coefficients[:-1]):
        res, tried = ansatz_escalate(c, base_gens + [u, v], cap=ansatz_cap,
                                     names=base_names + ["u", "v"], seed=seed)
        exprs[f"T^{i}"] = res.expression if res else None
        cert.add("field-equality", f"coefficient of T^{i} in K(u, v)", bool(res),
                 "" if res else res.reason, expression=res.expression if res else "",
                 bound=tried[-1] if tried else 0)
    res, tried = ansatz_escalate(y, base_gens + [u, v, x], cap=ansatz_cap,
                                 names=base_names + ["u", "v", x_name], seed=seed)
    exprs["y"] = res.expression if res else None
    cert.add("field-equality", "y in K(u, v)(x)", bool(res), "" if res else res.reason,
             expression=res.expression if res else "", bound=tried[-1] if tried else 0)
    return InvolutionResult(u, v, R, s, cert, mp.coefficients, exprs)


# -- quotient identity-----------------------------------------------------------

@dataclass
class IdentityReport:
    formal: bool
    specializations: int
    specialization_failures: list
    excluded_locus_consistent: bool

    @property
    def ok(self) -> bool:
        return self.formal and not self.specializations_failed and self.excluded_locus_consistent

    @property
    def specializations_failed(self) -> int:
        return len(self.specialization_failures)


def _identity_sides_numeric(a, b, x, y):
    # direct Fraction evaluation, independent of the rational-function engine
    den = x * y - a * b / (x * y)
    u = (x - a / x) / den
    v = (y - b / y) / den
    lhs = (x - a / x) / (a * y / x - b * x / y)
    rhs = -u / (b * u * u - a * v * v)
    return lhs, rhs


def verify_quotient_identity(samples: int = 100, seed: int = 0) -> IdentityReport:
    """(x - a/x)/((ay/x) - (bx/y)) == -u/(b u^2 - a v^2) in Q(a, b, x, y)."""
    R = Ring(("a", "b", "x", "y"))
    a, b, x, y = R.gens()
    u, v = uv_formulas(x, y, a, b)
    lhs = (x - a / x) / (a * y / x - b * x / y)
    rhs = -u / (b * u ** 2 - a * v ** 2)
    formal = lhs == rhs
    rng = random.Random(seed)
    done, failures = 0, []
    while done < samples:
        pt = [Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(4)]
        pa, pb, px, py = pt
        if 0 in pt or px * py * px * py == pa * pb or pa * py * py == pb * px * px:
            continue
        try:
            l, r = _identity_sides_numeric(pa, pb, px, py)
        except ZeroDivisionError:
            continue
        done += 1
        if l != r:
            failures.append(pt)
    # on xy = ab/(xy) the defining denominator of u vanishes
    excluded = False
    try:
        _identity_sides_numeric(Fraction(1), Fraction(4), Fraction(1), Fraction(2))
    except ZeroDivisionError:
        excluded = True
    return IdentityReport(formal, done, failures, excluded)


# -- bounded search for two-variable monomial invariants ----------------------

@dataclass
class MonomialSearchResult:
    f: RatFunc
    g: RatFunc
    certificate: InvariantCertificate
    pairs_tried: int
    candidates: int
    group_order: int
    expressions: dict


def laurent_exponents(bound: int) -> list[tuple[int, int]]:
    """Nonzero (i, j) with |i| + |j| <= bound, by L1 norm then descending lex."""
    out = []
    for k in range(1, bound + 1):
        shell = [(i, j) for i in range(-k, k + 1) for j in range(-k, k + 1) if abs(i) + abs(j) == k]
        out.extend(sorted(shell, reverse=True))
    return out


def _normalize(f: RatFunc) -> RatFunc:
    _, lc = P.lead(f.num)
    return f / lc


def jacobian(f: RatFunc, g: RatFunc, v1: str, v2: str) -> RatFunc:
    return partial(f, v1) * partial(g, v2) - partial(f, v2) * partial(g, v1)


def certify_invariant_pair(spec: A.ActionSpec, f: RatFunc, g: RatFunc, G=None,
                           cap: int = 32, seed: int = 0, schedule=SCHEDULE):
    """Certificate that K(x1, x2)^G = K(f, g); returns (certificate, expressions)."""
    R = spec.ring
    v1, v2 = R.variables
    x1, x2 = R.gens()
    G = G or spec.elements()
    cert = InvariantCertificate([f, g])
    for name, h in (("f", f), ("g", g)):
        for gname, aut in spec.generators.items():
            cert.add("invariance", f"{gname}({name}) = {name}", aut(h) == h, **{name: h})
    mp = orbit_min_poly(x1, G)
    order = len(G)
    cert.add("field-equality", f"orbit of {v1} has |G| = {order} elements", mp.degree == order)
    cert.add("invariance", f"min-poly of {v1} has invariant coefficients", mp.invariant,
             "; ".join(mp.failures))
    exprs = {}
    for i, c in enumerate(mp.coefficients[:-1]):
        res, tried = ansatz_escalate(c, [f, g], schedule=schedule, cap=cap, names=["f", "g"],
                                     seed=seed)
        exprs[f"T^{i}"] = res.expression if res else None
        if not cert.add("field-equality", f"coefficient of T^{i} in K(f, g)", bool(res),
                        "" if res else res.reason, expression=res.expression if res else ""):
            return cert, exprs
    res, tried = ansatz_escalate(x2, [f, g, x1], schedule=schedule, cap=cap,
                                 names=["f", "g", v1], seed=seed)
    exprs[v2] = res.expression if res else None
    cert.add("field-equality", f"{v2} in K(f, g)({v1})", bool(res), "" if res else res.reason,
             expression=res.expression if res else "")
    return cert, exprs


def monomial_fixed_2var(spec: A.ActionSpec, bound: int, ansatz_cap: int = 32, seed: int = 0,
                        screen_cap: int = 8):
    """Search group averages of Laurent monomials for a generating invariant pair."""
    R = spec.ring
    if R.nvars != 2:
        raise ValueError("monomial search needs exactly two variables")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    v1, v2 = R.variables
    G = spec.elements()
    if len(G) == 1:
        x1, x2 = R.gens()
        cert, exprs = certify_invariant_pair(spec, x1, x2, G, ansatz_cap, seed)
        return MonomialSearchResult(x1, x2, cert, 0, 0, 1, exprs)
    cands: list[RatFunc] = []
    for i, j in laurent_exponents(bound):
        mono = R.var(v1) ** i * R.var(v2) ** j
        r = reynolds(G, mono)
        if not r:
            continue
        r = _normalize(r)
        if any(r == c for c in cands):
            continue
        cands.append(r)
    tried = 0
    for f, g in itertools.combinations(cands, 2):
        if not jacobian(f, g, v1, v2):
            continue
        tried += 1
        cert, exprs = certify_invariant_pair(spec, f, g, G, min(screen_cap, ansatz_cap), seed,
                                             schedule=tuple(d for d in SCHEDULE if d <= screen_cap))
        if cert.ok:
            cert, exprs = certify_invariant_pair(spec, f, g, G, ansatz_cap, seed)
            if cert.ok:
                return MonomialSearchResult(f, g, cert, tried, len(cands), len(G), exprs)
    return NotFound(f"no generating pair among {len(cands)} averaged monomials (bound {bound})")

"""Field-membership tools: orbit minimal polynomials, the ansatz solver and
roundtrip certificates for coordinate changes.

``ansatz_membership`` decides whether ``target`` equals ``P(gens)/Q(gens)``
with ``deg P, deg Q <= bound``.  The linear system for the coefficients of P
and Q is sampled at random points and solved modulo primes; candidates are
then lifted to K and accepted only after an exact symbolic check, so the
modular step can cost time but never soundness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import modular as M
from . import poly as P
from .ratfunc import RatFunc, Ring, SubstitutionMap

MAX_ANSATZ_COLUMNS = 4000


@dataclass(frozen=True)
class NotFound:
    """No expression of the requested shape exists (or the search was cut off)."""

    reason: str

    def __bool__(self):
        return False


@dataclass
class AnsatzResult:
    expression: RatFunc  # in the ring of the generator names
    numerator: dict
    denominator: dict
    degree: int
    gens: tuple[RatFunc, ...]

    def __bool__(self):
        return True


def exponent_vectors(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree <= degree, by degree then lex."""
    out = []
    for d in range(degree + 1):
        level = []
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            level.append(tuple(e))
        out.extend(sorted(set(level), reverse=True))
    return out


class _ModEvaluator:
    """Evaluates a RatFunc modulo p under zeta -> r, caching reduced coefficients."""

    def __init__(self, f: RatFunc, p: int, r: int):
        self.num = [(e, M.reduce_element(c, p, r)) for e, c in f.num.items()]
        self.den = [(e, M.reduce_element(c, p, r)) for e, c in f.den.items()]
        self.p = p

    def _ev(self, terms, pt):
        p = self.p
        s = 0
        for e, c in terms:
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * pow(x, k, p) % p
            s += v
        return s % p

    def __call__(self, pt):
        d = self._ev(self.den, pt)
        if d == 0:
            return None
        return self._ev(self.num, pt) * pow(d, -1, self.p) % self.p


def _kernel_candidate(target, gens, exps, p, r, rng, need_q_col, limit=None):
    # the RREF of a column prefix is the prefix of the RREF, so once the free
    # column is known later primes only need columns up to it
    full = 2 * len(exps)
    ncols = min(full, limit) if limit else full
    ev_t = _ModEvaluator(target, p, r)
    ev_g = [_ModEvaluator(g, p, r) for g in gens]
    nv = target.ring.nvars
    maxdeg = max((sum(e) for e in exps), default=0)
    rows = []
    attempts = 0
    while len(rows) < ncols + 6:
        attempts += 1
        if attempts > 4 * (ncols + 6) + 50:
            raise RuntimeError("too many poles while sampling the ansatz system")
        pt = [rng.randrange(1, p) for _ in range(nv)]
        h = ev_t(pt)
        vals = [g(pt) for g in ev_g]
        if h is None or any(v is None for v in vals):
            continue
        pw = []
        for v in vals:
            t = [1]
            for _ in range(maxdeg):
                t.append(t[-1] * v % p)
            pw.append(t)
        row = []
        for e in exps[: (ncols + 1) // 2]:
            m = 1
            for t, k in zip(pw, e):
                if k:
                    m = m * t[k] % p
            row.append(m)
            row.append(-h * m % p)
        rows.append(row[:ncols])
    R, pivots = M.rref_mod(np.array(rows, dtype=np.int64), p)
    pivset = set(pivots)
    frees = [c for c in range(ncols) if c not in pivset]
    if not frees:
        return None, None
    for f in frees:
        v = M.kernel_vector_mod(R, pivots, f, ncols, p) + [0] * (full - ncols)
        if not any(v[c] for c in range(1, ncols, 2)):
            continue
        # a Q-part vanishing on the generators is a relation among them, not a solution
        q_vals = [sum(v[c] * row[c - 1] for c in range(1, ncols, 2)) % p for row in rows[:3]]
        if any(q_vals):
            return f, v
    return "relation-only", None


def ansatz_membership(target: RatFunc, gens: Sequence[RatFunc], degree_bound: int,
                      names: Sequence[str] | None = None, seed: int = 0,
                      max_primes: int = 40):
    """Find ``target = P(gens)/Q(gens)`` with total degrees <= degree_bound.

    Returns an ``AnsatzResult`` whose ``expression`` lives in the ring named by
    ``names`` (default g0, g1, ...) over the same coefficient field, or a
    ``NotFound``.  A NotFound is exact (no such P, Q exist) unless its reason
    says the search was cut off.
    """
    R = target.ring
    gens = tuple(gens)
    for g in gens:
        if g.ring is not R:
            raise ValueError("generators must live in the target's ring")
    names = tuple(names) if names else tuple(f"g{i}" for i in range(len(gens)))
    G = Ring(names, R.order)
    K = R.K
    exps = exponent_vectors(len(gens), degree_bound)
    ncols = 2 * len(exps)
    if ncols > MAX_ANSATZ_COLUMNS:
        return NotFound(f"ansatz with {ncols} unknowns exceeds the solver limit")
    rng = random.Random(seed * 7919 + degree_bound)
    primes = M.primes_for_order(K.order, max_primes)
    modulus = 1
    residues: list[list[int]] | None = None
    free_col = None
    previous = None
    for p in primes:
        roots = M.primitive_roots_of_unity(K.order, p)[: K.degree]
        per_emb = []
        for r in roots:
            limit = None if free_col is None else free_col + 1
            f, v = _kernel_candidate(target, gens, exps, p, r, rng, True, limit)
            if limit is not None and (f is None or f == "relation-only"):
                # the prime that fixed the free column had a rank drop; start over
                free_col, modulus, residues, previous = None, 1, None, None
                f, v = _kernel_candidate(target, gens, exps, p, r, rng, True, None)
            if f is None:
                return NotFound(f"no relation of degree <= {degree_bound}")
            if f == "relation-only":
                return NotFound(f"only relations among generators at degree <= {degree_bound}")
            per_emb.append((f, v))
        fs = {f for f, _ in per_emb}
        if len(fs) != 1:
            continue  # unlucky prime or point set
        f = fs.pop()
        if free_col is not None and f != free_col:
            if f < free_col:  # earlier prime was unlucky
                modulus, residues = 1, None
            else:
                continue
        free_col = f
        # coefficient components mod p for each unknown
        comps = []
        for idx in range(ncols):
            vals = [v[idx] for _, v in per_emb]
            if K.degree == 1:
                comps.append(vals)
            else:
                comps.append(M.solve_vandermonde_mod(list(roots), vals, p))
        if residues is None:
            residues = comps
            modulus = p
        else:
            new = []
            for old, cur in zip(residues, comps):
                new.append([_crt(a, modulus, b, p) for a, b in zip(old, cur)])
            residues = new
            modulus *= p
        recon = _reconstruct(residues, modulus)
        if recon is None:
            continue
        if recon != previous:
            previous = recon
            continue
        result = _verify(target, gens, G, exps, recon, degree_bound)
        if result is not None:
            return result
    return NotFound("modular reconstruction did not stabilise (search cut off)")


def _crt(a: int, m: int, b: int, p: int) -> int:
    t = (b - a) * pow(m, -1, p) % p
    return a + m * t


def _reconstruct(residues, modulus):
    out = []
    for comp in residues:
        fr = []
        for a in comp:
            q = M.rational_reconstruct(a, modulus)
            if q is None:
                return None
            fr.append(q)
        out.append(tuple(fr))
    return out


def _verify(target, gens, G, exps, recon, degree_bound):
    K = G.K
    num, den = {}, {}
    for idx, comps in enumerate(recon):
        if not any(comps):
            continue
        c = K.from_rational_components(comps)
        e = exps[idx // 2]
        (num if idx % 2 == 0 else den)[e] = c
    if not den:
        return None
    phi = SubstitutionMap(G, target.ring, list(gens))
    Pn = phi(G.from_polys(num))
    Qd = phi(G.from_polys(den))
    if Qd.is_zero():
        return None
    if Pn != target * Qd:
        return None
    expr = G.from_polys(num, den)
    return AnsatzResult(expr, expr.num, expr.den, degree_bound, tuple(gens))


def ansatz_escalate(target: RatFunc, gens: Sequence[RatFunc], schedule=(4, 8, 16, 32),
                    cap: int = 32, names=None, seed: int = 0):
    """Run the ansatz at increasing degree bounds up to ``cap``.

    Returns (result, tried_bounds); the result is a NotFound if every bound failed.
    """
    tried = []
    last = NotFound("no bound tried")
    for d in schedule:
        if d > cap:
            break
        tried.append(d)
        last = ansatz_membership(target, gens, d, names=names, seed=seed)
        if last:
            return last, tried
    return NotFound(f"not found up to degree {tried[-1] if tried else 0}: {last.reason}"), tried


# -- minimal polynomials over invariant subfields ------------------------------

@dataclass
class MinPolyResult:
    coefficients: list[RatFunc]  # c_0 .. c_m, monic (c_m = 1), in T
    orbit: list[RatFunc]
    invariant: bool
    failures: list[str] = dc_field(default_factory=list)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def orbit(h: RatFunc, group: Sequence[SubstitutionMap]) -> list[RatFunc]:
    seen: list[RatFunc] = []
    keys = set()
    for g in group:
        im = g(h)
        if im not in keys:
            keys.add(im)
            seen.append(im)
    return seen


def orbit_min_poly(h: RatFunc, group: Sequence[SubstitutionMap],
                   checks: Sequence[SubstitutionMap] | None = None) -> MinPolyResult:
    """prod over the orbit of h of (T - g(h)), with an invariance check of each
    coefficient under ``checks`` (default: every element of ``group``)."""
    orb = orbit(h, group)
    R = h.ring
    coeffs = [R.one()]
    for r in orb:
        # multiply by (T - r)
        new = [R.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * r
        coeffs = new
    failures = []
    for g in (checks if checks is not None else group):
        for i, c in enumerate(coeffs):
            if g(c) != c:
                failures.append(f"coefficient of T^{i} not fixed by {g.describe()}")
    return MinPolyResult(coeffs, orb, not failures, failures)


# -- roundtrip certificates ------------------------------------------------------

@dataclass
class RoundtripReport:
    ok: bool
    failures: list[str]

    def __bool__(self):
        return self.ok


def roundtrip_check(forward: SubstitutionMap, inverse: SubstitutionMap) -> RoundtripReport:
    """Check forward and inverse are mutually inverse on generators.

    ``forward`` maps ring A to ring B and ``inverse`` maps B to A (as
    substitutions).  Both composites must fix every generator.
    """
    failures = []
    if forward.target is not inverse.source or inverse.target is not forward.source:
        return RoundtripReport(False, ["rings of the two maps do not match"])
    A, B = forward.source, forward.target
    for v, im in zip(A.variables, forward.images):
        back = inverse(im)
        if back != A.var(v):
            failures.append(f"{v}: inverse(forward({v})) = {back}")
    for v, im in zip(B.variables, inverse.images):
        back = forward(im)
        if back != B.var(v):
            failures.append(f"{v}: forward(inverse({v})) = {back}")
    if (forward.k * inverse.k) % max(A.order, 1) != 1 % max(A.order, 1):
        failures.append("Galois parts do not cancel")
    return RoundtripReport(not failures, failures)


def random_point(ring: Ring, rng: random.Random, lo: int = -50, hi: int = 50) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi), rng.randint(1, 9)) for _ in range(ring.nvars)]

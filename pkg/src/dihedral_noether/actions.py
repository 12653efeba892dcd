"""Finite group actions on rational function fields.

A ``FieldAut`` is a field automorphism of ``K(v_1, ..., v_m)`` given by the
images of the variables and a Galois map on K.  Words compose right to left:
``apply_word("tau*rho^3", f) == tau(rho(rho(rho(f))))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cyclotomic import CyclotomicNumber
from .ratfield.ratfunc import RatFunc, Ring, SubstitutionMap

MAX_ORDER = 10000


def mod_index(i: int, modulus: int) -> int:
    """Subscript arithmetic; every 'index taken modulo n' goes through here."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    return i % modulus


class FieldAut:
    """Automorphism of a Ring's function field."""

    def __init__(self, ring: Ring, images: Mapping[str, object] | Sequence, galois: int = 1,
                 name: str | None = None):
        if isinstance(images, Mapping):
            full = {v: images.get(v, ring.var(v)) for v in ring.variables}
            unknown = set(images) - set(ring.variables)
            if unknown:
                raise ValueError(f"images given for unknown variables {sorted(unknown)}")
        else:
            full = list(images)
        self.map = SubstitutionMap(ring, ring, full, galois)
        self.ring = ring
        self.name = name
        self._inverse: FieldAut | None = None

    @classmethod
    def _from_map(cls, m: SubstitutionMap, name=None) -> "FieldAut":
        self = object.__new__(cls)
        self.map, self.ring, self.name, self._inverse = m, m.source, name, None
        return self

    @classmethod
    def identity(cls, ring: Ring) -> "FieldAut":
        return cls(ring, {}, 1, "1")

    @property
    def k(self) -> int:
        return self.map.k

    @property
    def images(self) -> tuple[RatFunc, ...]:
        return self.map.images

    def __call__(self, f):
        return self.map(f)

    def __mul__(self, other: "FieldAut") -> "FieldAut":
        """``(g * h)(f) == g(h(f))``."""
        return FieldAut._from_map(self.map.compose(other.map))

    def key(self):
        return (self.map.images, self.map.k)

    def __eq__(self, other):
        return isinstance(other, FieldAut) and self.ring is other.ring and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_identity(self) -> bool:
        return self.map.k % max(self.ring.order, 1) == 1 % max(self.ring.order, 1) and all(
            im == self.ring.var(i) for i, im in enumerate(self.map.images))

    def power(self, n: int) -> "FieldAut":
        if n < 0:
            return self.inverse().power(-n)
        result = FieldAut.identity(self.ring)
        base = self
        while n:
            if n & 1:
                result = base * result
            n >>= 1
            if n:
                base = base * base
        return result

    def order(self) -> int:
        g = self
        for n in range(1, MAX_ORDER + 1):
            if g.is_identity():
                return n
            g = self * g
        raise ValueError("automorphism order exceeds the search limit")

    def inverse(self) -> "FieldAut":
        if self._inverse is None:
            n = self.order()
            self._inverse = self.power(n - 1) if n > 1 else self
        return self._inverse

    def set_inverse(self, inv: "FieldAut") -> None:
        """Record a known inverse (checked)."""
        if not (self * inv).is_identity() or not (inv * self).is_identity():
            raise ValueError("claimed inverse is not an inverse")
        self._inverse = inv

    def describe(self) -> str:
        return self.map.describe() or "identity"

    def __repr__(self):
        return f"FieldAut({self.name or ''}: {self.describe()})"


_WORD_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(-?\d+))?\s*\*?")


def parse_word(word: str) -> list[tuple[str, int]]:
    """'tau*rho^3' or 'tau rho^-1' -> [(name, exponent), ...] left to right."""
    word = word.strip()
    if word in ("", "1", "id"):
        return []
    out, pos = [], 0
    while pos < len(word):
        m = _WORD_TOKEN.match(word, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse group word {word!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        pos = m.end()
    return out


@dataclass
class RelationCheck:
    relation: str
    ok: bool
    detail: str = ""


@dataclass
class PresentationReport:
    spec_name: str
    entries: list[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


class ActionSpec:
    """Named generators acting on one ring, plus declared relations (words equal to 1)."""

    def __init__(self, ring: Ring, generators: Mapping[str, FieldAut], relations: Sequence[str] = (),
                 name: str = ""):
        self.ring = ring
        self.generators = dict(generators)
        for g, aut in self.generators.items():
            if aut.ring is not ring:
                raise ValueError(f"generator {g} acts on a different ring")
            if aut.name is None:
                aut.name = g
        self.relations = list(relations)
        self.name = name

    def word_aut(self, word: str) -> FieldAut:
        result = FieldAut.identity(self.ring)
        for g, e in parse_word(word):
            result = result * self._gen(g).power(e)
        return result

    def _gen(self, g: str) -> FieldAut:
        try:
            return self.generators[g]
        except KeyError:
            raise KeyError(f"unknown generator {g!r} in {self.name or 'action'}") from None

    def apply_word(self, word: str, f: RatFunc) -> RatFunc:
        for g, e in reversed(parse_word(word)):
            aut = self._gen(g)
            if e < 0:
                aut, e = aut.inverse(), -e
            for _ in range(e):
                f = aut(f)
        return f

    def word_galois(self, word: str) -> int:
        n = max(self.ring.order, 1)
        k = 1
        for g, e in parse_word(word):
            kg = self._gen(g).k
            k = k * pow(kg, e, n) if n > 1 else 1
        return k % n if n > 1 else 1

    def acts_trivially(self, word: str) -> tuple[bool, str]:
        bad = []
        for v in self.ring.variables:
            im = self.apply_word(word, self.ring.var(v))
            if im != self.ring.var(v):
                bad.append(f"{v} -> {im}")
        n = max(self.ring.order, 1)
        if n > 1 and self.word_galois(word) != 1:
            bad.append(f"zeta -> zeta^{self.word_galois(word)}")
        return not bad, "; ".join(bad)

    def verify_presentation(self, relations: Sequence[str] | None = None) -> PresentationReport:
        rep = PresentationReport(self.name)
        for rel in (relations if relations is not None else self.relations):
            ok, detail = self.acts_trivially(rel)
            rep.entries.append(RelationCheck(rel, ok, detail))
        return rep

    def elements(self, limit: int = 5000) -> list[FieldAut]:
        """All group elements generated (breadth first from the identity)."""
        ident = FieldAut.identity(self.ring)
        seen = {ident.key(): ident}
        frontier = [ident]
        gens = list(self.generators.values())
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = s * g
                    k = h.key()
                    if k not in seen:
                        seen[k] = h
                        nxt.append(h)
                        if len(seen) > limit:
                            raise ValueError("group larger than the enumeration limit")
            frontier = nxt
        return list(seen.values())

    def restrict(self, names: Sequence[str], name: str = "") -> "ActionSpec":
        return ActionSpec(self.ring, {g: self.generators[g] for g in names}, (), name or self.name)

    def __repr__(self):
        return f"ActionSpec({self.name}: {', '.join(self.generators)} on {self.ring})"


def apply_word(spec: ActionSpec, word: str, f: RatFunc) -> RatFunc:
    return spec.apply_word(word, f)


def verify_presentation(spec: ActionSpec) -> PresentationReport:
    return spec.verify_presentation()


def dihedral_relations(n: int, sigma: str = "sigma", tau: str = "tau") -> list[str]:
    return [f"{sigma}^{n}", f"{tau}^2", f"{tau}*{sigma}*{tau}^-1*{sigma}"]


def check_semi_invariant(spec: ActionSpec, word: str, f: RatFunc, scalar, target: RatFunc) -> bool:
    """True iff word(f) == scalar * target exactly."""
    return spec.apply_word(word, f) == target * scalar


# -- linear changes of variables ---------------------------------------------

@dataclass
class LinearChange:
    """New variables defined as functions of old ones, with the inverse."""

    old: Ring
    new: Ring
    definitions: SubstitutionMap  # new -> old: image of new var = its definition
    inverse: SubstitutionMap  # old -> new


def dft_change(n: int, x_names: Sequence[str] | None = None,
               y_names: Sequence[str] | None = None) -> LinearChange:
    """y_i = sum_j zeta^(-ij) x_j over Q(zeta_n); inverse x_j = (1/n) sum_i zeta^(ij) y_i."""
    x_names = list(x_names or [f"x{i}" for i in range(n)])
    y_names = list(y_names or [f"y{i}" for i in range(n)])
    X = Ring(x_names, n)
    Y = Ring(y_names, n)
    K = X.K

    def root(k):
        if n <= 2:
            return K.convert((-1) ** mod_index(k, n))
        return K.zeta(mod_index(k, n))

    xs, ys = X.gens(), Y.gens()
    defs = []
    for i in range(n):
        acc = X.zero()
        for j in range(n):
            acc = acc + xs[j] * root(-i * j)
        defs.append(acc)
    inv = []
    for j in range(n):
        acc = Y.zero()
        for i in range(n):
            acc = acc + ys[i] * root(i * j)
        inv.append(acc / n)
    return LinearChange(X, Y, SubstitutionMap(Y, X, defs), SubstitutionMap(X, Y, inv))


def operator_poly_apply(spec: ActionSpec, gen: str, coeffs: Sequence, f: RatFunc) -> RatFunc:
    """sum_k coeffs[k] * gen^k(f)."""
    aut = spec.generators[gen]
    acc = f.ring.zero()
    cur = f
    for k, c in enumerate(coeffs):
        if k:
            cur = aut(cur)
        if c:
            acc = acc + cur * c
    return acc


def expand_linear_factors(roots: Sequence, one) -> list:
    """Coefficients (low to high) of prod_j (S + roots[j]) as a polynomial in S."""
    coeffs = [one]
    for r in roots:
        new = [one * 0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] + c * r
        coeffs = new
    return coeffs


# -- transport of an action along a change of variables -----------------------

@dataclass
class TransportCheck:
    variable: str
    ok: bool
    lhs: RatFunc
    rhs: RatFunc


def check_transport(old_aut: FieldAut, definitions: SubstitutionMap,
                    new_aut: FieldAut) -> list[TransportCheck]:
    """Check that new_aut is old_aut expressed in new variables.

    ``definitions`` maps the new ring into the old one (each new variable to
    its defining expression).  For each new variable w the check is
    old_aut(def(w)) == def(new_aut(w)).
    """
    if definitions.target is not old_aut.ring or definitions.source is not new_aut.ring:
        raise ValueError("rings do not line up for transport")
    out = []
    for v, d in zip(new_aut.ring.variables, definitions.images):
        lhs = old_aut(d)
        rhs = definitions(new_aut(new_aut.ring.var(v)))
        out.append(TransportCheck(v, lhs == rhs, lhs, rhs))
    return out


def scalar(ring: Ring, c) -> object:
    """Coerce a scalar (int, Fraction, CyclotomicNumber, text) into the ring's field."""
    if isinstance(c, str):
        return ring.parse(c).constant_value()
    if isinstance(c, CyclotomicNumber) or not ring.K.is_rational:
        return ring.K.convert(c)
    return ring.K.convert(c)

"""Rational functions in canonical form and substitution maps between rings.

A ``RatFunc`` is ``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic in
grlex order, so two equal functions have identical representations and text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from ..cyclotomic import CyclotomicNumber, GaloisMap
from . import poly as P
from .domain import CoefficientField, field

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_RESERVED = {"zeta", "z"}


class Ring:
    """The field K(v_1, ..., v_m): named variables over Q or Q(zeta_n).

    Rings are interned, so ``Ring(("x",), 5) is Ring(("x",), 5)``.
    """

    _cache: dict = {}

    def __new__(cls, variables: Sequence[str], order: int = 1):
        variables = tuple(variables)
        if order == 2:
            order = 1
        key = (variables, order)
        hit = cls._cache.get(key)
        if hit is not None:
            return hit
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        for v in variables:
            if not _NAME.match(v) or v in _RESERVED:
                raise ValueError(f"invalid variable name {v!r}")
        self = super().__new__(cls)
        self.variables = variables
        self.order = order
        self.K: CoefficientField = field(order)
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        cls._cache[key] = self
        return self

    def __reduce__(self):
        return (Ring, (self.variables, self.order))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def one_poly(self) -> dict:
        return {(0,) * self.nvars: self.K.one}

    # -- element constructors ----------------------------------------
    def const(self, c) -> "RatFunc":
        if isinstance(c, RatFunc):
            return c
        return RatFunc._raw(self, P.const(self.K, self.nvars, c), self.one_poly())

    def zero(self) -> "RatFunc":
        return self.const(0)

    def one(self) -> "RatFunc":
        return self.const(1)

    def var(self, name: str | int) -> "RatFunc":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return RatFunc._raw(self, {tuple(e): self.K.one}, self.one_poly())

    def gens(self) -> tuple["RatFunc", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def zeta(self, power: int = 1) -> "RatFunc":
        return self.const(self.K.zeta(power))

    def from_polys(self, num: dict, den: dict | None = None) -> "RatFunc":
        return RatFunc(self, num, den if den is not None else self.one_poly())

    def parse(self, text: str) -> "RatFunc":
        return _Parser(self, text).parse()

    def __call__(self, x) -> "RatFunc":
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def __repr__(self):
        tag = "QQ" if self.order == 1 else f"QQ(zeta_{self.order})"
        return f"{tag}({', '.join(self.variables)})"


def _canonical(R: Ring, num: dict, den: dict) -> tuple[dict, dict]:
    K = R.K
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return {}, R.one_poly()
    if not P.is_const(den):
        g = P.gcd(K, num, den)
        if not P.is_const(g):
            num = P.divexact(num, g)
            den = P.divexact(den, g)
    _, lc = P.lead(den)
    if lc != 1:
        inv = K.inv(lc)
        num = P.scale(num, inv)
        den = P.scale(den, inv)
    return num, den


class RatFunc:
    """Element of a ``Ring``'s function field in canonical form."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring: Ring, num: dict, den: dict):
        self.ring = ring
        self.num, self.den = _canonical(ring, num, den)
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, num: dict, den: dict) -> "RatFunc":
        # caller guarantees canonical form
        self = object.__new__(cls)
        self.ring, self.num, self.den, self._hash = ring, num, den, None
        return self

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return P.is_const(self.den)

    def is_constant(self) -> bool:
        return P.is_const(self.num) and P.is_const(self.den)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return P.const_value(self.ring.K, self.num)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(self, o, False)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(self, o, True)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(o, self, True)

    def __neg__(self):
        return RatFunc._raw(self.ring, P.neg(self.num), self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        K = self.ring.K
        _, lc = P.lead(self.num)
        inv = K.inv(lc)
        return RatFunc._raw(self.ring, P.scale(self.den, inv), P.scale(self.num, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(o, self.inverse())

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        R = self.ring
        nv, one = R.nvars, R.K.one
        # numerator and denominator stay coprime under powers
        return RatFunc._raw(R, P.power(base.num, e, nv, one), P.power(base.den, e, nv, one))

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.ring is other.ring and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            try:
                return self == self.ring.const(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, self.ring.order, frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    # -- evaluation and maps ----------------------------------------------
    def evaluate(self, point: Mapping[str, object] | Sequence):
        """Value at a point; raises ZeroDivisionError on a pole."""
        K = self.ring.K
        if isinstance(point, Mapping):
            point = [point[v] for v in self.ring.variables]
        pt = [K.convert(x) for x in point]
        d = P.evaluate(K, self.den, pt)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return P.evaluate(K, self.num, pt) * K.inv(d)

    def degree(self) -> int:
        """max(total degree of num, total degree of den)."""
        return max(P.total_degree(self.num), P.total_degree(self.den))

    def variables_used(self) -> set[str]:
        idx = P.variables(self.num) | P.variables(self.den)
        return {self.ring.variables[i] for i in idx}

    def galois(self, k: int) -> "RatFunc":
        """Apply zeta -> zeta^k to the coefficients only."""
        K = self.ring.K
        if K.is_rational:
            return self
        return RatFunc._raw(self.ring, P.map_coeffs(self.num, lambda c: c.galois(k)),
                            P.map_coeffs(self.den, lambda c: c.galois(k)))

    def to_ring(self, target: Ring) -> "RatFunc":
        """Reinterpret in a ring with a superset of the variables (same or larger field)."""
        if target is self.ring:
            return self
        images = {v: target.var(v) for v in self.ring.variables}
        return SubstitutionMap(self.ring, target, images)(self)

    # -- text ----------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RatFunc({render(self)!r})"


def _add(a: RatFunc, b: RatFunc, negate: bool) -> RatFunc:
    R = a.ring
    K = R.K
    bn = P.neg(b.num) if negate else b.num
    if not a.num:
        return RatFunc._raw(R, bn, b.den)
    if not bn:
        return a
    if a.den == b.den:
        num = P.add(a.num, bn)
        if P.is_const(a.den):
            return RatFunc._raw(R, num, a.den)
        return RatFunc(R, num, a.den)
    if P.is_const(a.den):
        return RatFunc._raw(R, P.add(P.mul(a.num, b.den), bn), b.den)
    if P.is_const(b.den):
        return RatFunc._raw(R, P.add(a.num, P.mul(bn, a.den)), a.den)
    g = P.gcd(K, a.den, b.den)
    if P.is_const(g):
        num = P.add(P.mul(a.num, b.den), P.mul(bn, a.den))
        den = P.mul(a.den, b.den)
        return _finish(R, num, den)
    da = P.divexact(a.den, g)
    db = P.divexact(b.den, g)
    num = P.add(P.mul(a.num, db), P.mul(bn, da))
    den = P.mul(da, b.den)
    if not num:
        return R.zero()
    h = P.gcd(K, num, g)
    if not P.is_const(h):
        num = P.divexact(num, h)
        den = P.divexact(den, h)
    return _finish(R, num, den)


def _finish(R: Ring, num: dict, den: dict) -> RatFunc:
    # num/den already coprime; only normalize the leading coefficient
    if not num:
        return R.zero()
    _, lc = P.lead(den)
    if lc != 1:
        inv = R.K.inv(lc)
        num, den = P.scale(num, inv), P.scale(den, inv)
    return RatFunc._raw(R, num, den)


def _mul(a: RatFunc, b: RatFunc) -> RatFunc:
    R = a.ring
    K = R.K
    if not a.num or not b.num:
        return R.zero()
    n1, d1, n2, d2 = a.num, a.den, b.num, b.den
    if not P.is_const(d2):
        g = P.gcd(K, n1, d2)
        if not P.is_const(g):
            n1, d2 = P.divexact(n1, g), P.divexact(d2, g)
    if not P.is_const(d1):
        g = P.gcd(K, n2, d1)
        if not P.is_const(g):
            n2, d1 = P.divexact(n2, g), P.divexact(d1, g)
    return _finish(R, P.mul(n1, n2), P.mul(d1, d2))


class SubstitutionMap:
    """A field map K(source) -> K'(target): variable images plus a Galois action.

    Applying it to ``f`` first applies ``zeta -> zeta^k`` to the coefficients
    of ``f`` and then substitutes the images for the variables.
    """

    def __init__(self, source: Ring, target: Ring, images: Mapping[str, RatFunc] | Sequence[RatFunc],
                 galois: int | GaloisMap = 1):
        self.source = source
        self.target = target
        if isinstance(images, Mapping):
            missing = [v for v in source.variables if v not in images]
            if missing:
                raise ValueError(f"no image given for {missing}")
            imgs = [images[v] for v in source.variables]
        else:
            imgs = list(images)
            if len(imgs) != source.nvars:
                raise ValueError("wrong number of images")
        out = []
        for im in imgs:
            if not isinstance(im, RatFunc):
                im = target.parse(im) if isinstance(im, str) else target.const(im)
            if im.ring is not target:
                raise ValueError(f"image {im} is not in {target}")
            out.append(im)
        self.images = tuple(out)
        k = galois.k if isinstance(galois, GaloisMap) else galois
        if source.K.is_rational:
            k = 1
        else:
            if target.order != source.order:
                raise ValueError("Galois action needs matching cyclotomic fields")
            k %= source.order
        self.k = k
        self._pow_cache: dict = {}

    @property
    def galois_map(self) -> GaloisMap:
        return GaloisMap(self.k, max(self.source.order, 1))

    def _powers(self, i: int, which: int, e: int) -> dict:
        key = (i, which, e)
        hit = self._pow_cache.get(key)
        if hit is None:
            im = self.images[i]
            base = im.num if which == 0 else im.den
            hit = P.power(base, e, self.target.nvars, self.target.K.one)
            self._pow_cache[key] = hit
        return hit

    def _coeff(self, c):
        if self.k != 1:
            c = c.galois(self.k)
        return self.target.K.convert(c)

    def _poly_image(self, p: dict, degs: Sequence[int]) -> dict:
        # sum_c c * prod num_i^a_i den_i^(D_i - a_i)
        out: dict = {}
        for e, c in p.items():
            term = {(0,) * self.target.nvars: self._coeff(c)}
            for i, a in enumerate(e):
                if a:
                    term = P.mul(term, self._powers(i, 0, a))
                if degs[i] - a:
                    term = P.mul(term, self._powers(i, 1, degs[i] - a))
            out = P.add(out, term)
        return out

    def __call__(self, f: RatFunc) -> RatFunc:
        if not isinstance(f, RatFunc):
            f = self.source.const(f)
        if f.ring is not self.source:
            raise ValueError(f"{f} is not in {self.source}")
        T = self.target
        if not f.num:
            return T.zero()
        n = self.source.nvars
        dn = [P.degree_in(f.num, i) for i in range(n)]
        dd = [P.degree_in(f.den, i) for i in range(n)]
        num = self._poly_image(f.num, dn)
        den = self._poly_image(f.den, dd)
        if not den:
            raise ZeroDivisionError(f"denominator of {f} vanishes under the substitution")
        for i in range(n):
            diff = dd[i] - dn[i]
            if diff > 0:
                num = P.mul(num, self._powers(i, 1, diff))
            elif diff < 0:
                den = P.mul(den, self._powers(i, 1, -diff))
        return RatFunc(T, num, den)

    def compose(self, inner: "SubstitutionMap") -> "SubstitutionMap":
        """``self.compose(inner)(f) == self(inner(f))``."""
        if inner.target is not self.source:
            raise ValueError("maps do not compose")
        images = [self(im) for im in inner.images]
        k = (self.k * inner.k) % self.target.order if not self.target.K.is_rational else 1
        return SubstitutionMap(inner.source, self.target, images, k)

    __matmul__ = compose

    def __eq__(self, other):
        return (isinstance(other, SubstitutionMap) and self.source is other.source
                and self.target is other.target and self.images == other.images and self.k == other.k)

    def __hash__(self):
        return hash((self.images, self.k))

    def describe(self) -> str:
        parts = [f"{v} -> {im}" for v, im in zip(self.source.variables, self.images)]
        if self.k != 1:
            parts.append(f"zeta -> zeta^{self.k}")
        return "; ".join(parts)

    def __repr__(self):
        return f"SubstitutionMap({self.describe()})"


def substitute(f: RatFunc, images: Mapping[str, object], target: Ring | None = None,
               galois: int = 1) -> RatFunc:
    """Replace variables of ``f`` by the given images (unlisted variables stay)."""
    src = f.ring
    target = target or src
    full = {}
    for v in src.variables:
        if v in images:
            full[v] = images[v]
        else:
            full[v] = target.var(v)
    return SubstitutionMap(src, target, full, galois)(f)


# -- rendering -------------------------------------------------------------

def _render_mono(R: Ring, e) -> str:
    parts = []
    for v, x in zip(R.variables, e):
        if x == 1:
            parts.append(v)
        elif x:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def render_poly(R: Ring, p: dict) -> str:
    if not p:
        return "0"
    K = R.K
    out = []
    for e in sorted(p, key=P.grlex_key, reverse=True):
        c = p[e]
        mono = _render_mono(R, e)
        if K.is_rational_element(c):
            q = c if K.is_rational else c.to_fraction()
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
        else:
            sign = "+"
            s = K.render(c)
            body = s if not mono else f"{s}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += sign + body
    return text


def render(f: RatFunc) -> str:
    """Deterministic text; ``Ring.parse`` inverts it."""
    R = f.ring
    num = render_poly(R, f.num)
    if P.is_const(f.den):
        return num
    den = render_poly(R, f.den)
    if len(f.num) > 1 or "/" in num:
        num = f"({num})"
    simple_den = len(f.den) == 1 and "*" not in den
    if not simple_den:
        den = f"({den})"
    return f"{num}/{den}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\[[^\]]*\])|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.R = ring
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character in {self.text!r} at {pos}")
            if m.group(1):
                self.toks.append(("num", int(m.group(1))))
            elif m.group(2):
                self.toks.append(("id", m.group(2)))
            elif m.group(3):
                self.toks.append(("cyc", m.group(3)[1:-1]))
            else:
                op = m.group(4)
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        t = self.peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise ValueError(f"parse error in {self.text!r}: expected {val or kind}, got {t[1]!r}")
        self.i += 1
        return t

    def parse(self) -> RatFunc:
        if not self.toks:
            raise ValueError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = v * w if op == "*" else v / w
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            e = self.take("num")[1]
            return base ** (sign * e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.R.const(val)
        if kind == "id":
            self.take()
            if val == "zeta":
                return self.R.zeta()
            return self.R.var(val)
        if kind == "cyc":
            self.take()
            if self.R.K.is_rational:
                c = CyclotomicNumber.parse(val, 1) if "@" not in val else CyclotomicNumber.parse(val)
                return self.R.const(c)
            return self.R.const(CyclotomicNumber.parse(val, self.R.order))
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ValueError(f"parse error in {self.text!r}: unexpected {val!r}")


def partial(f: RatFunc, var: str) -> RatFunc:
    """Partial derivative with respect to a variable."""
    R = f.ring
    i = R.index(var)
    dn, dd = P.derivative(f.num, i), P.derivative(f.den, i)
    num = P.sub(P.mul(dn, f.den), P.mul(f.num, dd))
    return RatFunc(R, num, P.mul(f.den, f.den))


def transfer(f: RatFunc, target: Ring) -> RatFunc:
    """Move f into another ring by variable name (same coefficient field or an extension)."""
    if f.ring is target:
        return f
    used = f.variables_used()
    missing = used - set(target.variables)
    if missing:
        raise ValueError(f"{sorted(missing)} not available in {target}")
    images = {v: (target.var(v) if v in used else target.zero()) for v in f.ring.variables}
    return SubstitutionMap(f.ring, target, images)(f)

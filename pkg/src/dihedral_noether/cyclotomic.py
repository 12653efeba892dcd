"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as residues modulo the n-th cyclotomic polynomial in the
power basis ``1, z, ..., z^(phi(n)-1)``.  Internally the coefficients are a
tuple of integers over one positive common denominator, kept in lowest terms,
so equality is structural.

>>> z = CyclotomicNumber.zeta(9)
>>> z ** 9 == 1
True
>>> str(z ** 6 + z ** 3)
'-1@9'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

MAX_ORDER = 64


class UnsupportedOrder(ValueError):
    pass


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_ORDER:
        raise UnsupportedOrder(f"cyclotomic order {n!r} not supported (1..{MAX_ORDER})")


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # a, b low-to-high integer coefficients, b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert not any(a), "inexact division of cyclotomic polynomials"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    _check_order(n)
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_ints(n: int, raw: Sequence[int]) -> list[int]:
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    r = list(raw)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            base = i - d
            for j in range(d):
                if phi[j]:
                    r[base + j] -= c * phi[j]
    r = r[:d]
    r.extend([0] * (d - len(r)))
    return r


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # z^m reduced, for 0 <= m < n
    d = euler_phi(n)
    rows = []
    for m in range(n):
        raw = [0] * (m + 1)
        raw[m] = 1
        rows.append(tuple(_reduce_ints(n, raw)) if m >= d else tuple(raw + [0] * (d - m - 1)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _galois_matrix(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    table = _power_table(n)
    return tuple(table[(j * k) % n] for j in range(euler_phi(n)))


class CyclotomicNumber:
    """Element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, num: Sequence[int], den: int = 1, _normalized: bool = False):
        self.order = order
        if _normalized:
            self.num = tuple(num)
            self.den = den
        else:
            _check_order(order)
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if len(num) != euler_phi(order):
                raise ValueError("coefficient length must equal phi(order)")
            if den < 0:
                num = [-c for c in num]
                den = -den
            g = math.gcd(den, *num)
            if g > 1:
                num = [c // g for c in num]
                den //= g
            if not any(num):
                den = 1
            self.num = tuple(num)
            self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable) -> "CyclotomicNumber":
        """Build from rational coefficients in powers of zeta (any length; reduced)."""
        _check_order(order)
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            fr = [Fraction(0)]
        den = math.lcm(*(c.denominator for c in fr))
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return cls(order, _reduce_exponents(order, ints), den)

    @classmethod
    def rational(cls, order: int, q) -> "CyclotomicNumber":
        _check_order(order)
        q = Fraction(q)
        num = [0] * euler_phi(order)
        num[0] = q.numerator
        return cls(order, num, q.denominator)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        _check_order(order)
        return cls(order, _power_table(order)[power % order], 1)

    # -- accessors ----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self) -> bool:
        return any(self.num)

    def __complex__(self) -> complex:
        import cmath

        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * w ** j for j, c in enumerate(self.num)) / self.den

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CyclotomicNumber(self.order, [a + b for a, b in zip(self.num, o.num)], self.den)
        return CyclotomicNumber(
            self.order, [a * o.den + b * self.den for a, b in zip(self.num, o.num)], self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.num], self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.num, o.num
        d = len(a)
        if d == 1:
            return CyclotomicNumber(self.order, [a[0] * b[0]], self.den * o.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(self.order, _reduce_ints(self.order, prod), self.den * o.den)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        p = self
        for k in range(2, self.order):
            if math.gcd(k, self.order) == 1:
                p = p * self.galois(k)
        return p.to_fraction()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        if len(self.num) == 1:
            return CyclotomicNumber(self.order, [self.den], self.num[0])
        rest = CyclotomicNumber.rational(self.order, 1)
        for k in range(2, self.order):
            if math.gcd(k, self.order) == 1:
                rest = rest * self.galois(k)
        nrm = (rest * self).to_fraction()
        return rest * (1 / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta -> zeta**k."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError(f"exponent {k} not coprime to order {n}")
        k %= n
        if k == 1 % n or len(self.num) == 1:
            return self
        mat = _galois_matrix(n, k)
        out = [0] * len(self.num)
        for c, row in zip(self.num, mat):
            if c:
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CyclotomicNumber(n, out, self.den, _normalized=True)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.order, self.num, self.den))
        return self._hash

    # -- text ---------------------------------------------------------
    def render(self, var: str = "z") -> str:
        """Polynomial string in ``var`` without the order suffix."""
        parts = []
        for j, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            mag = abs(q)
            if j == 0:
                body = str(mag)
            else:
                mono = var if j == 1 else f"{var}^{j}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if q < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        return f"{self.render()}@{self.order}"

    def __repr__(self):
        return f"CyclotomicNumber({str(self)!r})"

    @classmethod
    def parse(cls, text: str, order: int | None = None) -> "CyclotomicNumber":
        """Inverse of ``str``; accepts any exponent, reduces on the way in."""
        text = text.strip()
        if "@" in text:
            body, _, n = text.rpartition("@")
            order = int(n)
        else:
            body = text
        if order is None:
            raise ValueError("order missing (expected '...@n')")
        return cls.from_coeffs(order, parse_zeta_polynomial(body))


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*z(?:\s*\^\s*(\d+))?)?")


def parse_zeta_polynomial(body: str) -> list[Fraction]:
    """Coefficient list (by exponent) of a polynomial string in ``z``."""
    s = body.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse cyclotomic literal {body!r} at {pos}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {body!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            if m.group(3).startswith("*") and m.group(2) is None:
                raise ValueError(f"dangling '*' in {body!r}")
            e = int(m.group(4)) if m.group(4) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * c
        pos = m.end()
    top = max(coeffs)
    return [coeffs.get(i, Fraction(0)) for i in range(top + 1)]


def _reduce_exponents(n: int, ints: Sequence[int]) -> list[int]:
    # fold exponents >= n using z^n = 1, then reduce mod Phi_n
    if len(ints) > n:
        folded = [0] * n
        for i, c in enumerate(ints):
            folded[i % n] += c
        ints = folded
    return _reduce_ints(n, ints)


def cyc_reduce(order: int, raw: Sequence) -> CyclotomicNumber:
    """Canonical element of Q(zeta_order) for coefficients ``raw`` of 1, z, z^2, ..."""
    return CyclotomicNumber.from_coeffs(order, raw)


class GaloisMap:
    """The automorphism zeta -> zeta**k of Q(zeta_n)."""

    __slots__ = ("k", "order")

    def __init__(self, k: int, order: int):
        _check_order(order)
        if math.gcd(k, order) != 1:
            raise ValueError(f"exponent {k} not coprime to order {order}")
        self.k = k % order if order > 1 else 0
        self.order = order

    def __call__(self, z):
        if isinstance(z, CyclotomicNumber):
            if z.order != self.order:
                raise ValueError("order mismatch")
            return z.galois(self.k)
        return z  # rationals are fixed

    def __mul__(self, other: "GaloisMap") -> "GaloisMap":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return GaloisMap(self.k * other.k, self.order)

    def is_identity(self) -> bool:
        return self.order <= 2 or self.k == 1

    def __eq__(self, other):
        return isinstance(other, GaloisMap) and (self.k, self.order) == (other.k, other.order)

    def __hash__(self):
        return hash((self.k, self.order))

    def __repr__(self):
        return f"GaloisMap({self.k}, {self.order})"


def galois_apply(g: GaloisMap, z: CyclotomicNumber) -> CyclotomicNumber:
    return g(z)


def sqrt5_element() -> CyclotomicNumber:
    """The square root of 5 in Q(zeta_5) fixed by complex conjugation: 1 + 2z + 2z^4."""
    return CyclotomicNumber.from_coeffs(5, [1, 2, 0, 0, 2])


def eta(order: int) -> CyclotomicNumber:
    """zeta + zeta^-1, generator of the maximal real subfield."""
    return CyclotomicNumber.zeta(order) + CyclotomicNumber.zeta(order, -1)

"""Coefficient fields for polynomial rings: Q (as Fraction) or Q(zeta_n)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..cyclotomic import CyclotomicNumber, GaloisMap, euler_phi


class CoefficientField:
    """Q when ``order`` is 1 or 2, otherwise Q(zeta_order).

    Elements of Q are plain ``Fraction`` objects; this keeps rational-only
    rings fast.
    """

    __slots__ = ("order", "degree", "zero", "one")

    def __init__(self, order: int):
        if order == 2:
            order = 1
        self.order = order
        self.degree = euler_phi(order)
        if self.degree == 1:
            self.zero, self.one = Fraction(0), Fraction(1)
        else:
            self.zero = CyclotomicNumber.rational(order, 0)
            self.one = CyclotomicNumber.rational(order, 1)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def convert(self, c):
        if self.degree == 1:
            if isinstance(c, CyclotomicNumber):
                return c.to_fraction()
            return Fraction(c)
        if isinstance(c, CyclotomicNumber):
            if c.order != self.order:
                if c.is_rational():
                    return CyclotomicNumber.rational(self.order, c.to_fraction())
                raise ValueError(f"cannot embed {c} into Q(zeta_{self.order})")
            return c
        return CyclotomicNumber.rational(self.order, c)

    def zeta(self, power: int = 1):
        if self.degree == 1:
            raise ValueError("Q has no primitive root of unity of this order")
        return CyclotomicNumber.zeta(self.order, power)

    def galois(self, c, k: int):
        if self.degree == 1:
            return c
        return c.galois(k)

    def inv(self, c):
        if self.degree == 1:
            return 1 / c
        return c.inverse()

    def is_rational_element(self, c) -> bool:
        return self.degree == 1 or c.is_rational()

    def galois_map(self, k: int) -> GaloisMap:
        return GaloisMap(k, self.order)

    def render(self, c) -> str:
        """Coefficient text; rationals bare, others bracketed."""
        if self.degree == 1:
            return str(c)
        if c.is_rational():
            return str(c.to_fraction())
        return "[" + c.render() + "]"

    def to_rational_components(self, c) -> tuple[Fraction, ...]:
        if self.degree == 1:
            return (c,)
        return c.coeffs

    def from_rational_components(self, comps):
        if self.degree == 1:
            return Fraction(comps[0])
        return CyclotomicNumber.from_coeffs(self.order, comps)

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.order == self.order

    def __hash__(self):
        return hash(("K", self.order))

    def __repr__(self):
        return "QQ" if self.degree == 1 else f"QQ(zeta_{self.order})"


@lru_cache(maxsize=None)
def field(order: int) -> CoefficientField:
    return CoefficientField(order)

"""The group ring Lambda = Z[<rho>] on exponent vectors of y-monomials, the
character map to Z/9 and its kernel ideal M.

Coordinates follow the doubling orbit of 1 mod 9, so position p holds the
exponent of ``y_{2^p mod 9}`` and rho acts as the cyclic shift p -> p+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .ratfield.ratfunc import RatFunc, Ring

MODULUS = 9
ORBIT = (1, 2, 4, 8, 7, 5)
RANK = len(ORBIT)


@dataclass(frozen=True)
class GroupRingElt:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != RANK:
            raise ValueError(f"group ring elements have {RANK} coordinates")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_subscripts(cls, exps: dict[int, int]) -> "GroupRingElt":
        """From {y-subscript: exponent}, e.g. {1: 1, 8: 1} for y1*y8."""
        v = [0] * RANK
        for i, e in exps.items():
            v[ORBIT.index(i % MODULUS)] += e
        return cls(tuple(v))

    def rho(self, times: int = 1) -> "GroupRingElt":
        t = times % RANK
        c = self.coeffs
        return GroupRingElt(c[-t:] + c[:-t] if t else c)

    def orbit(self) -> list["GroupRingElt"]:
        return [self.rho(i) for i in range(RANK)]

    def __add__(self, other):
        return GroupRingElt(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def subscripts(self) -> dict[int, int]:
        return {ORBIT[p]: e for p, e in enumerate(self.coeffs) if e}


def phi(e: GroupRingElt | Sequence[int]) -> int:
    """Character exponent j with sigma(y^e) = zeta^j y^e, as a residue mod 9."""
    c = e.coeffs if isinstance(e, GroupRingElt) else tuple(e)
    return sum(a * s for a, s in zip(c, ORBIT)) % MODULUS


# -- integer lattices ------------------------------------------------------------

def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF: upper triangular, positive pivots, entries above a pivot in [0, pivot)."""
    A = [list(map(int, r)) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    r = 0
    for c in range(ncols):
        # gcd-combine column c over rows r..end
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[k] = A[k], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
            if r == len(A):
                break
    out = [row for row in A[:r]]
    return out


def bareiss_determinant(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def cofactor_determinant(M: Sequence[Sequence]) -> int:
    """Laplace expansion along the first row; independent oracle for small matrices."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * cofactor_determinant(minor)
    return total


@dataclass
class LatticeIdeal:
    basis: list[list[int]]  # HNF rows

    @property
    def index(self) -> int:
        d = 1
        for i, row in enumerate(self.basis):
            d *= row[i]
        return d

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Integer c with c . basis = v, or None if v is not in the lattice."""
        rest = list(v)
        c = []
        for i, row in enumerate(self.basis):
            if rest[i] % row[i]:
                return None
            q = rest[i] // row[i]
            c.append(q)
            rest = [a - q * b for a, b in zip(rest, row)]
        return c if not any(rest) else None

    def contains(self, v) -> bool:
        vec = v.coeffs if isinstance(v, GroupRingElt) else v
        return self.coordinates(vec) is not None

    def rho_closed(self) -> bool:
        return all(self.contains(GroupRingElt(tuple(r)).rho()) for r in self.basis)


def kernel_lattice() -> LatticeIdeal:
    """HNF of M = ker(phi); aborts if the index is not 9 or rho-closure fails."""
    gens = []
    for p in range(RANK):
        v = [0] * RANK
        v[p] = MODULUS
        gens.append(v)
    for p in range(1, RANK):
        v = [0] * RANK
        v[0] = -ORBIT[p]
        v[p] = 1
        gens.append(v)
    H = hermite_normal_form(gens)
    L = LatticeIdeal(H)
    for row in H:
        if phi(row) != 0:
            raise AssertionError("kernel basis vector outside the kernel")
    if len(H) != RANK or L.index != MODULUS:
        raise AssertionError(f"kernel index {L.index} != {MODULUS}")
    if not L.rho_closed():
        raise AssertionError("kernel lattice is not closed under rho")
    return L


@dataclass
class FreeGeneratorWitness:
    generator: GroupRingElt
    coordinate_matrix: list[list[int]]
    determinant: int
    oracle_determinant: int
    bound: int
    examined: int


@dataclass(frozen=True)
class LatticeNotFound:
    bound: int
    examined: int

    def __bool__(self):
        return False


def enumeration_order(bound: int):
    """Vectors with entries in [-bound, bound] by increasing max-norm, then lex."""
    for k in range(1, bound + 1):
        for v in itertools.product(range(-k, k + 1), repeat=RANK):
            if max(abs(a) for a in v) == k:
                yield v


def orbit_coordinates(L: LatticeIdeal, e: GroupRingElt) -> list[list[int]] | None:
    rows = []
    for g in e.orbit():
        c = L.coordinates(g.coeffs)
        if c is None:
            return None
        rows.append(c)
    return rows


def find_free_generator(bound: int, lattice: LatticeIdeal | None = None):
    """First e in M (enumeration order) whose rho-orbit is a Z-basis of M."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    L = lattice or kernel_lattice()
    examined = 0
    for v in enumeration_order(bound):
        if phi(v) != 0:
            continue
        examined += 1
        e = GroupRingElt(v)
        C = orbit_coordinates(L, e)
        if C is None:
            continue
        d = bareiss_determinant(C)
        if abs(d) == 1:
            oracle = cofactor_determinant(C)
            if oracle != d:
                raise AssertionError("determinant oracle disagrees")
            return FreeGeneratorWitness(e, C, d, oracle, bound, examined)
    return LatticeNotFound(bound, examined)


def y_ring(order: int = MODULUS) -> Ring:
    return Ring([f"y{i}" for i in ORBIT], order)


def monomial_from_exponents(e: GroupRingElt, ring: Ring | None = None) -> RatFunc:
    """prod y_{2^p}^{e_p} as a rational function."""
    R = ring or y_ring()
    out = R.one()
    for p, a in enumerate(e.coeffs):
        if a:
            out = out * R.var(f"y{ORBIT[p]}") ** a
    return out


"""Modular helpers: primes with roots of unity, reduction of field elements,
row reduction over F_p (numpy, p < 2**31) and rational reconstruction."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..cyclotomic import CyclotomicNumber

PRIME_CEILING = 2 ** 31 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def primes_for_order(order: int, count: int) -> tuple[int, ...]:
    """Largest ``count`` primes below 2**31 that are 1 mod ``order``."""
    order = max(order, 2)
    out = []
    p = PRIME_CEILING - (PRIME_CEILING - 1) % order
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p -= order
    return tuple(out)


@lru_cache(maxsize=None)
def primitive_roots_of_unity(order: int, p: int) -> tuple[int, ...]:
    """All primitive ``order``-th roots of unity mod p, indexed by k coprime to order."""
    if order <= 2:
        return (1,)
    m = (p - 1) // order
    for g in range(2, p):
        r = pow(g, m, p)
        if all(pow(r, order // q, p) != 1 for q in _prime_factors(order)):
            break
    return tuple(pow(r, k, p) for k in range(1, order) if math.gcd(k, order) == 1)


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def reduce_element(c, p: int, r: int) -> int:
    """Image of a Fraction or CyclotomicNumber under zeta -> r mod p."""
    if isinstance(c, CyclotomicNumber):
        acc = 0
        rp = 1
        for a in c.num:
            if a:
                acc += a * rp
            rp = rp * r % p
        return acc % p * pow(c.den, -1, p) % p
    c = Fraction(c)
    return c.numerator % p * pow(c.denominator, -1, p) % p


def rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr, c:] = (A[nzr, c:] - np.outer(col[nzr], A[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def kernel_vector_mod(R: np.ndarray, pivots: list[int], free: int, ncols: int, p: int) -> list[int]:
    """Basis vector of the kernel attached to free column ``free`` (value 1 there)."""
    v = [0] * ncols
    v[free] = 1
    for i, c in enumerate(pivots):
        if c < free:
            v[c] = int(-R[i, free] % p)
    return v


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Fraction n/d with |n|, d <= sqrt(m/2) and n = a d mod m, if one exists."""
    a %= m
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def solve_vandermonde_mod(roots: list[int], values: list[int], p: int) -> list[int]:
    """Coefficients c_j with sum_j c_j r_i^j = v_i mod p (small systems)."""
    n = len(roots)
    M = [[pow(r, j, p) for j in range(n)] + [v % p] for r, v in zip(roots, values)]
    for c in range(n):
        k = next(i for i in range(c, n) if M[i][c])
        M[c], M[k] = M[k], M[c]
        inv = pow(M[c][c], -1, p)
        M[c] = [x * inv % p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]

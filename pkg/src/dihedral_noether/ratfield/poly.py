"""Sparse multivariate polynomials over a ``CoefficientField``.

A polynomial is a dict mapping exponent tuples (one entry per ring variable)
to nonzero coefficients.  Functions here are pure: they never mutate their
arguments.  Term order is graded lexicographic throughout.
"""

from __future__ import annotations

import random
from typing import Iterable

from .domain import CoefficientField

Poly = dict


def grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


def const(K: CoefficientField, nvars: int, c) -> Poly:
    c = K.convert(c)
    return {(0,) * nvars: c} if c else {}


def monomial(K: CoefficientField, nvars: int, exps, c=None) -> Poly:
    return {tuple(exps): K.one if c is None else K.convert(c)}


def is_const(p: Poly) -> bool:
    return not p or (len(p) == 1 and not any(next(iter(p))))


def const_value(K: CoefficientField, p: Poly):
    if not p:
        return K.zero
    if not is_const(p):
        raise ValueError("polynomial is not constant")
    return next(iter(p.values()))


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def neg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def sub(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def scale(a: Poly, c) -> Poly:
    if not c:
        return {}
    if c == 1:
        return a
    return {e: v * c for e, v in a.items()}


def mul_term(a: Poly, exps: tuple[int, ...], c) -> Poly:
    return {tuple(x + y for x, y in zip(e, exps)): v * c for e, v in a.items()}


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        (e, c), = b.items()
        if not any(e):
            return scale(a, c)
        return mul_term(a, e, c)
    out: dict = {}
    get = out.get
    for e1, c1 in b.items():
        for e2, c2 in a.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return {e: c for e, c in out.items() if c}


def power(a: Poly, n: int, nvars: int, one) -> Poly:
    if n < 0:
        raise ValueError("negative power of a polynomial")
    result = {(0,) * nvars: one}
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def lead(a: Poly):
    e = max(a, key=grlex_key)
    return e, a[e]


def monic(K: CoefficientField, a: Poly) -> Poly:
    if not a:
        return a
    _, c = lead(a)
    if c == 1:
        return a
    return scale(a, K.inv(c))


def total_degree(a: Poly) -> int:
    return max((sum(e) for e in a), default=-1)


def degree_in(a: Poly, i: int) -> int:
    return max((e[i] for e in a), default=-1)


def min_exponents(a: Poly) -> tuple[int, ...]:
    it = iter(a)
    m = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < m[i]:
                m[i] = x
    return tuple(m)


def shift_down(a: Poly, m: tuple[int, ...]) -> Poly:
    if not any(m):
        return a
    return {tuple(x - y for x, y in zip(e, m)): c for e, c in a.items()}


def variables(a: Poly) -> set[int]:
    out: set[int] = set()
    for e in a:
        for i, x in enumerate(e):
            if x:
                out.add(i)
    return out


def coeffs_in(a: Poly, i: int) -> dict[int, Poly]:
    """Coefficients of ``a`` viewed as a polynomial in variable ``i``."""
    out: dict[int, Poly] = {}
    for e, c in a.items():
        d = e[i]
        key = e[:i] + (0,) + e[i + 1:]
        out.setdefault(d, {})[key] = c
    return out


def from_coeffs_in(cs: dict[int, Poly], i: int) -> Poly:
    out: Poly = {}
    for d, p in cs.items():
        for e, c in p.items():
            out[e[:i] + (d,) + e[i + 1:]] = c
    return out


def divexact(a: Poly, b: Poly) -> Poly | None:
    """``a / b`` if ``b`` divides ``a`` exactly, else ``None``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    if len(b) == 1:
        (eb, cb), = b.items()
        inv = 1 / cb
        out = {}
        for e, c in a.items():
            d = tuple(x - y for x, y in zip(e, eb))
            if min(d) < 0:
                return None
            out[d] = c * inv
        return out
    eb, cb = lead(b)
    inv = 1 / cb
    # quick degree screens
    for i in range(len(eb)):
        if degree_in(b, i) > degree_in(a, i):
            return None
    rest = [(e, c) for e, c in b.items() if e != eb]
    r = dict(a)
    q: Poly = {}
    while r:
        er = max(r, key=grlex_key)
        d = tuple(x - y for x, y in zip(er, eb))
        if min(d) < 0:
            return None
        t = r.pop(er) * inv
        q[d] = t
        for e, c in rest:
            k = tuple(x + y for x, y in zip(e, d))
            v = r.get(k)
            if v is None:
                r[k] = -t * c
            else:
                v = v - t * c
                if v:
                    r[k] = v
                else:
                    del r[k]
    return q


def evaluate(K: CoefficientField, a: Poly, point) -> object:
    """Value at a point (a sequence of field elements, one per variable)."""
    cache: dict = {}
    total = K.zero
    for e, c in a.items():
        v = c
        for i, x in enumerate(e):
            if x:
                key = (i, x)
                pw = cache.get(key)
                if pw is None:
                    pw = cache[key] = point[i] ** x
                v = v * pw
        total = total + v
    return total


def map_coeffs(a: Poly, f) -> Poly:
    out = {}
    for e, c in a.items():
        v = f(c)
        if v:
            out[e] = v
    return out


# -- univariate helpers over K (coefficient lists, low degree first) ---------

def _utrim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _urem(a: list, b: list, inv_lb) -> list:
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            t = c * inv_lb
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] = a[i - db + j] - t * b[j]
    return _utrim(a[:db])


def ugcd_degree(K: CoefficientField, a: list, b: list) -> int:
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _urem(a, b, K.inv(b[-1]))
    return len(a) - 1


def specialize_to_univariate(K, a: Poly, i: int, point) -> list:
    """Substitute ``point`` for every variable except ``i``."""
    deg = degree_in(a, i)
    out = [K.zero] * (deg + 1)
    cache: dict = {}
    for e, c in a.items():
        v = c
        for j, x in enumerate(e):
            if x and j != i:
                key = (j, x)
                pw = cache.get(key)
                if pw is None:
                    pw = cache[key] = point[j] ** x
                v = v * pw
        out[e[i]] = out[e[i]] + v
    return out


# -- gcd -------------------------------------------------------------------

_RNG = random.Random(20240611)


def gcd(K: CoefficientField, a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (grlex leading coefficient 1)."""
    if not a:
        return monic(K, b)
    if not b:
        return monic(K, a)
    ma, mb = min_exponents(a), min_exponents(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    g = _gcd_core(K, shift_down(a, ma), shift_down(b, mb))
    if any(m):
        g = mul_term(g, m, K.one)
    return monic(K, g)


def gcd_many(K: CoefficientField, polys: Iterable[Poly]) -> Poly:
    g: Poly = {}
    for p in polys:
        g = gcd(K, g, p)
        if is_const(g) and g:
            break
    return g


def content_in(K: CoefficientField, a: Poly, i: int) -> Poly:
    cs = sorted(coeffs_in(a, i).values(), key=len)
    return gcd_many(K, cs)


def _one(K, nvars):
    return {(0,) * nvars: K.one}


def _gcd_core(K: CoefficientField, a: Poly, b: Poly) -> Poly:
    # a, b nonzero and free of monomial factors
    nv = len(next(iter(a)))
    if len(a) == 1 or len(b) == 1:
        return _one(K, nv)
    if len(a) == len(b):
        ea, ca = lead(a)
        eb, cb = lead(b)
        if ea == eb and scale(a, cb * K.inv(ca)) == b:
            return a
    va, vb = variables(a), variables(b)
    while va != vb:
        for v in va - vb:
            a = content_in(K, a, v)
        for v in vb - va:
            b = content_in(K, b, v)
        if is_const(a) or is_const(b):
            return _one(K, nv)
        va, vb = variables(a), variables(b)
    if len(a) <= len(b):
        if divexact(b, a) is not None:
            return a
    elif divexact(a, b) is not None:
        return b
    x = min(va, key=lambda v: (max(degree_in(a, v), degree_in(b, v)), v))
    ca, cb = content_in(K, a, x), content_in(K, b, x)
    c = gcd(K, ca, cb)
    pa = a if is_const(ca) else divexact(a, ca)
    pb = b if is_const(cb) else divexact(b, cb)
    if _coprime_in(K, pa, pb, x, nv):
        return c
    g = _prs(K, pa, pb, x)
    return mul(c, g)


def _coprime_in(K, a: Poly, b: Poly, x: int, nv: int) -> bool:
    """Random specialization of the other variables proves coprimality in x."""
    da, db = degree_in(a, x), degree_in(b, x)
    for _ in range(2):
        point = [K.convert(_RNG.randint(-97, 97)) for _ in range(nv)]
        ua = specialize_to_univariate(K, a, x, point)
        ub = specialize_to_univariate(K, b, x, point)
        if not ua[da] or not ub[db]:
            continue
        return ugcd_degree(K, ua, ub) == 0
    return False


def _prim_part(K, cs: dict[int, Poly]) -> dict[int, Poly]:
    g = gcd_many(K, sorted(cs.values(), key=len))
    if is_const(g):
        c = K.inv(lead(cs[max(cs)])[1])
        return {d: scale(p, c) for d, p in cs.items()}
    out = {}
    for d, p in cs.items():
        out[d] = divexact(p, g)
    c = K.inv(lead(out[max(out)])[1])
    return {d: scale(p, c) for d, p in out.items()}


def _prem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    db = max(b)
    lcb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lcr = r[dr]
        nr: dict[int, Poly] = {}
        for d, p in r.items():
            if d != dr:
                nr[d] = mul(p, lcb)
        s = dr - db
        for d, p in b.items():
            if d == db:
                continue
            k = d + s
            t = sub(nr.get(k, {}), mul(p, lcr))
            if t:
                nr[k] = t
            else:
                nr.pop(k, None)
        r = {d: p for d, p in nr.items() if p}
    return r


def _prs(K, a: Poly, b: Poly, x: int) -> Poly:
    A, B = coeffs_in(a, x), coeffs_in(b, x)
    if max(A) < max(B):
        A, B = B, A
    while True:
        R = _prem(A, B)
        if not R:
            return from_coeffs_in(_prim_part(K, B), x)
        if max(R) == 0:
            return _one(K, len(next(iter(a))))
        A, B = B, _prim_part(K, R)


def derivative(a: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in a.items():
        k = e[i]
        if k:
            out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
    return out

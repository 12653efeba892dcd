"""Dense exact linear algebra over any field whose elements support + - * /.

Used for matrices of rational functions (affine trivializations) and of
cyclotomic numbers (change of variables).
"""

from __future__ import annotations

from typing import Sequence

Matrix = list


def identity(n: int, one, zero) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            s = A[i][0] * B[0][j]
            for t in range(1, m):
                s = s + A[i][t] * B[t][j]
            row.append(s)
        out.append(row)
    return out


def matvec(A: Matrix, v: Sequence) -> list:
    out = []
    for row in A:
        s = row[0] * v[0]
        for a, b in zip(row[1:], v[1:]):
            s = s + a * b
        out.append(s)
    return out


def _is_zero(x) -> bool:
    return not x


def determinant(A: Matrix):
    """Determinant by Gaussian elimination."""
    M = [list(r) for r in A]
    n = len(M)
    det = None
    sign = 1
    for c in range(n):
        k = next((i for i in range(c, n) if not _is_zero(M[i][c])), None)
        if k is None:
            return M[0][0] - M[0][0]
        if k != c:
            M[c], M[k] = M[k], M[c]
            sign = -sign
        piv = M[c][c]
        det = piv if det is None else det * piv
        for i in range(c + 1, n):
            if not _is_zero(M[i][c]):
                f = M[i][c] / piv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det if sign == 1 else -det


def inverse(A: Matrix, one, zero) -> Matrix:
    """Inverse by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(A)
    M = [list(r) + identity(n, one, zero)[i] for i, r in enumerate(A)]
    for c in range(n):
        k = next((i for i in range(c, n) if not _is_zero(M[i][c])), None)
        if k is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[k] = M[k], M[c]
        piv = M[c][c]
        M[c] = [a / piv for a in M[c]]
        for i in range(n):
            if i != c and not _is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [r[n:] for r in M]

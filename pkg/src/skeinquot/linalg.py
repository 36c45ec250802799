"""Dense matrices over Q(zeta_p), stored as tuples of row tuples of CycNum."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclo import CycNum

Matrix = tuple  # tuple[tuple[CycNum, ...], ...]


def mat(rows: Sequence[Sequence[CycNum]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(p: int, n: int) -> Matrix:
    z, o = CycNum.from_int(p, 0), CycNum.from_int(p, 1)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def diag(entries: Sequence[CycNum]) -> Matrix:
    n = len(entries)
    z = CycNum.from_int(entries[0].p, 0)
    return tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n))


def is_diagonal(M: Matrix) -> bool:
    return all(M[i][j].is_zero() for i in range(len(M)) for j in range(len(M)) if i != j)


def matmul(X: Matrix, Y: Matrix) -> Matrix:
    n, m, k = len(X), len(Y[0]), len(Y)
    p = X[0][0].p
    z = CycNum.from_int(p, 0)
    cols = [[Y[r][c] for r in range(k)] for c in range(m)]
    out = []
    for i in range(n):
        row = X[i]
        nz = [(r, x) for r, x in enumerate(row) if not x.is_zero()]
        new = []
        for c in range(m):
            col = cols[c]
            acc = z
            for r, x in nz:
                y = col[r]
                if not y.is_zero():
                    acc = acc + x * y
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def mul_all(*Ms: Matrix) -> Matrix:
    out = Ms[0]
    for M in Ms[1:]:
        out = matmul(out, M)
    return out


def scale(M: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in M)


def add(X: Matrix, Y: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(X, Y))


def sub(X: Matrix, Y: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(X, Y))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M))


def conj(M: Matrix) -> Matrix:
    return tuple(tuple(x.conj() for x in row) for row in M)


def galois(M: Matrix, t: int) -> Matrix:
    return tuple(tuple(x.galois(t) for x in row) for row in M)


def dagger(M: Matrix) -> Matrix:
    return transpose(conj(M))


def matpow(M: Matrix, n: int, inverse: Matrix | None = None) -> Matrix:
    if n < 0:
        if inverse is None:
            inverse = inv(M)
        return matpow(inverse, -n)
    p = M[0][0].p
    result = identity(p, len(M))
    base = M
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def scalar_of(M: Matrix) -> CycNum | None:
    """The scalar s with M = s Id, or None."""
    s = M[0][0]
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if i == j:
                if x != s:
                    return None
            elif not x.is_zero():
                return None
    return s


def proportional(X: Matrix, Y: Matrix) -> CycNum | None:
    """s with X = s Y (Y nonzero), or None."""
    n = len(X)
    for i in range(n):
        for j in range(n):
            if not Y[i][j].is_zero():
                s = X[i][j] / Y[i][j]
                if scale(Y, s) == X:
                    return s
                return None
    return None


def inv(M: Matrix) -> Matrix:
    """Gauss-Jordan inverse over Q(zeta_p)."""
    n = len(M)
    p = M[0][0].p
    z, o = CycNum.from_int(p, 0), CycNum.from_int(p, 1)
    aug = [list(M[i]) + [o if i == j else z for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = aug[col][col].inverse()
        aug[col] = [x * pinv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def det(M: Matrix) -> CycNum:
    n = len(M)
    p = M[0][0].p
    a = [list(r) for r in M]
    d = CycNum.from_int(p, 1)
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return CycNum.from_int(p, 0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            d = -d
        d = d * a[col][col]
        pinv = a[col][col].inverse()
        for r in range(col + 1, n):
            if not a[r][col].is_zero():
                f = a[r][col] * pinv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return d


def trace(M: Matrix) -> CycNum:
    acc = M[0][0]
    for i in range(1, len(M)):
        acc = acc + M[i][i]
    return acc


def charpoly(M: Matrix) -> list[CycNum]:
    """Coefficients of det(x I - M), highest degree first (Faddeev-LeVerrier)."""
    n = len(M)
    p = M[0][0].p
    coeffs = [CycNum.from_int(p, 1)]
    I = identity(p, n)
    Mk = I
    c = CycNum.from_int(p, 1)
    for k in range(1, n + 1):
        AM = matmul(M, Mk)
        c = trace(AM) * Fraction(-1, k)
        coeffs.append(c)
        Mk = add(AM, scale(I, c))
    return coeffs


def is_isometry(M: Matrix, w_src: Sequence[CycNum], w_tgt: Sequence[CycNum]) -> bool:
    """True iff M^dagger H_tgt M = H_src exactly, H diagonal with the given weights."""
    n = len(M[0])
    for i in range(n):
        for j in range(i, n):
            acc = CycNum.from_int(w_src[0].p, 0)
            for k in range(len(M)):
                a, b = M[k][i], M[k][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a.conj() * w_tgt[k] * b
            target = w_src[i] if i == j else 0
            if acc != target:
                return False
    return True

"""Dense exact linear algebra over CycScalar.

Matrices are tuples of row tuples.  Everything is column-vector
convention: the image of basis vector c is column c.
"""
from __future__ import annotations

from typing import Sequence

from ..scalars import CycScalar

Matrix = tuple[tuple[CycScalar, ...], ...]
Vector = tuple[CycScalar, ...]

ZERO = CycScalar.zero()
ONE = CycScalar.one()


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(c)) for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def scalar_matrix(n: int, a: CycScalar) -> Matrix:
    return tuple(tuple(a if i == j else ZERO for j in range(n)) for i in range(n))


def from_rows(rows: Sequence[Sequence[CycScalar]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def from_columns(cols: Sequence[Sequence[CycScalar]], nrows: int | None = None) -> Matrix:
    if not cols:
        return tuple(() for _ in range(nrows or 0))
    return tuple(tuple(c[i] for c in cols) for i in range(len(cols[0])))


def columns(a: Matrix) -> list[Vector]:
    if not a:
        return []
    return [tuple(row[j] for row in a) for j in range(len(a[0]))]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return ()
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return ()
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * m
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in enumerate(b[k]):
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def matvec(a: Matrix, x: Sequence[CycScalar]) -> Vector:
    out = []
    for row in a:
        acc = ZERO
        for r, y in zip(row, x):
            if not r.is_zero() and not y.is_zero():
                acc = acc + r * y
        out.append(acc)
    return tuple(out)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c: CycScalar, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def vadd(x: Sequence[CycScalar], y: Sequence[CycScalar]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vscale(c: CycScalar, x: Sequence[CycScalar]) -> Vector:
    return tuple(c * a for a in x)


def is_zero_vector(x: Sequence[CycScalar]) -> bool:
    return all(a.is_zero() for a in x)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_scalar(a: Matrix) -> bool:
    n = len(a)
    return all(
        (a[i][j] == a[0][0]) if i == j else a[i][j].is_zero() for i in range(n) for j in range(n)
    )


def power(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def rref(a: Sequence[Sequence[CycScalar]]) -> tuple[list[list[CycScalar]], list[int]]:
    """Reduced row echelon form and pivot columns (pivot row: least complex entry)."""
    m = [list(r) for r in a]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, len(m)) if not m[i][c].is_zero()]
        if not cands:
            continue
        p = min(cands, key=lambda i: m[i][c].complexity())
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y if not y.is_zero() else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(a: Sequence[Sequence[CycScalar]]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[CycScalar]], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if not a:
        n = ncols or 0
        return [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    n = len(a[0])
    R, piv = rref(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, pc in zip(R, piv):
            if not row[f].is_zero():
                x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in R[:n])


def solve_in_basis(basis: Sequence[Vector], vecs: Sequence[Vector]) -> Matrix:
    """Coordinates (as columns) of each vector in ``vecs`` w.r.t. independent ``basis``.

    Raises ValueError if some vector is outside the span.
    """
    k = len(basis)
    if k == 0:
        if any(not is_zero_vector(v) for v in vecs):
            raise ValueError("vector outside span")
        return tuple()
    n = len(basis[0])
    aug = [[basis[j][i] for j in range(k)] + [v[i] for v in vecs] for i in range(n)]
    R, piv = rref(aug)
    if piv[:k] != list(range(k)) or any(p >= k for p in piv):
        raise ValueError("vector outside span")
    return tuple(tuple(R[i][k + j] for j in range(len(vecs))) for i in range(k))


class EchelonSpan:
    """Incrementally maintained row-reduced basis of a subspace."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[list[CycScalar]] = []  # each with a unit pivot
        self.pivots: list[int] = []
        self.originals: list[Vector] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[CycScalar]) -> list[CycScalar]:
        x = list(v)
        for row, p in zip(self.rows, self.pivots):
            if not x[p].is_zero():
                f = x[p]
                x = [a - f * b if not b.is_zero() else a for a, b in zip(x, row)]
        return x

    def add(self, v: Sequence[CycScalar]) -> bool:
        """Insert v; returns True if it enlarged the span."""
        x = self.reduce(v)
        p = next((i for i, a in enumerate(x) if not a.is_zero()), None)
        if p is None:
            return False
        inv = x[p].inverse()
        x = [a * inv if not a.is_zero() else a for a in x]
        # keep fully reduced
        for k, row in enumerate(self.rows):
            if not row[p].is_zero():
                f = row[p]
                self.rows[k] = [a - f * b if not b.is_zero() else a for a, b in zip(row, x)]
        self.rows.append(x)
        self.pivots.append(p)
        self.originals.append(tuple(v))
        return True

    def contains(self, v: Sequence[CycScalar]) -> bool:
        return is_zero_vector(self.reduce(v))

    def basis(self) -> list[Vector]:
        order = sorted(range(len(self.rows)), key=lambda k: self.pivots[k])
        return [tuple(self.rows[k]) for k in order]

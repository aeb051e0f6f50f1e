"""Exact integer linear algebra: Hermite/Smith normal forms, integer
solving, and sublattices of Z^n.

Matrices are plain lists of rows of Python ints. Everything here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]
Vector = list[int]


class IntLinError(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = [[int(x) for x in row] for row in rows]
    if m and any(len(row) != len(m[0]) for row in m):
        raise IntLinError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise IntLinError(f"shape mismatch {shape(a)} x {shape(b)}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence[int]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(k: int, a: Matrix) -> Matrix:
    return [[k * x for x in row] for row in a]


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise IntLinError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _row_combine(m: Matrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    ri, rj = m[i], m[j]
    m[i] = [a * x + b * y for x, y in zip(ri, rj)]
    m[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u @ m == h``, ``u`` unimodular, and ``h`` in row
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)`` and zero rows at the bottom.
    """
    h = as_matrix(m)
    rows, cols = shape(h)
    u = identity(rows)
    r = 0
    for col in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if h[i][col] == 0:
                continue
            if h[r][col] == 0:
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
                continue
            g, x, y = _xgcd(h[r][col], h[i][col])
            a, b = h[r][col] // g, h[i][col] // g
            _row_combine(h, r, i, x, y, -b, a)
            _row_combine(u, r, i, x, y, -b, a)
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        piv = h[r][col]
        for i in range(r):
            q = h[i][col] // piv
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf_pivots(h: Matrix) -> list[int]:
    """Pivot column of each non-zero row of an echelon matrix."""
    piv = []
    for row in h:
        j = next((k for k, x in enumerate(row) if x != 0), None)
        if j is None:
            break
        piv.append(j)
    return piv


def is_hnf(h: Matrix) -> bool:
    rows, _ = shape(h)
    piv = hnf_pivots(h)
    r = len(piv)
    if any(any(row) for row in h[r:]):
        return False
    if any(b <= a for a, b in zip(piv, piv[1:])):
        return False
    for k, j in enumerate(piv):
        p = h[k][j]
        if p <= 0:
            return False
        if any(not 0 <= h[i][j] < p for i in range(k)):
            return False
    return True


def snf(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(s, u, v)`` with ``u @ m @ v == s``.

    ``s`` is diagonal with non-negative entries, each dividing the next.
    """
    s = as_matrix(m)
    rows, cols = shape(s)
    u = identity(rows)
    v = identity(cols)
    # columns are handled as rows of the transposes
    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
            if not nz:
                return _snf_fix_divisibility(s, u, v)
            _, i, j = min(nz)
            if i != t:
                s[t], s[i] = s[i], s[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                for row in s:
                    row[t], row[j] = row[j], row[t]
                for row in v:
                    row[t], row[j] = row[j], row[t]
            piv = s[t][t]
            done = True
            for i in range(t + 1, rows):
                q = s[i][t] // piv
                if q:
                    s[i] = [x - q * y for x, y in zip(s[i], s[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if s[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = s[t][j] // piv
                if q:
                    for row in s:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if s[t][j]:
                    done = False
            if done:
                if s[t][t] < 0:
                    s[t] = [-x for x in s[t]]
                    u[t] = [-x for x in u[t]]
                break
    return _snf_fix_divisibility(s, u, v)


def _snf_fix_divisibility(s: Matrix, u: Matrix, v: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    rows, cols = shape(s)
    k = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = s[i][i], s[i + 1][i + 1]
            if a == 0 and b == 0:
                continue
            if a != 0 and b % a == 0:
                continue
            # diag(a, b) -> diag(g, a*b/g) via unimodular row/column moves
            g, x, y = _xgcd(a, b)
            # rows: [x y; -b/g a/g], columns: [1 -y*b/g; 1 x*a/g]
            ag, bg = a // g, b // g
            _row_combine(u, i, i + 1, x, y, -bg, ag)
            for row in v:
                ci, cj = row[i], row[i + 1]
                row[i] = ci + cj
                row[i + 1] = -y * bg * ci + x * ag * cj
            s[i][i], s[i + 1][i + 1] = g, a * b // g
            if s[i + 1][i + 1] < 0:
                s[i + 1][i + 1] = -s[i + 1][i + 1]
                u[i + 1] = [-x for x in u[i + 1]]
            changed = True
    # zeros sort to the end
    nz = [i for i in range(k) if s[i][i] != 0]
    z = [i for i in range(k) if s[i][i] == 0]
    order = nz + z
    if order != list(range(k)):
        perm_rows = order + list(range(k, rows))
        perm_cols = order + list(range(k, cols))
        u = [u[i] for i in perm_rows]
        v = [[row[j] for j in perm_cols] for row in v]
        s2 = zeros(rows, cols)
        for t, i in enumerate(order):
            s2[t][t] = s[i][i]
        s = s2
    return s, u, v


def solve_integer(m: Sequence[Sequence[int]], c: Sequence[int]) -> tuple[Vector, list[Vector]] | None:
    """Solve ``m @ z == c`` over the integers via the HNF of ``m^T``.

    Returns ``(particular, kernel_basis)`` or ``None`` when no integer
    solution exists. Every solution is ``particular`` plus an integer
    combination of the kernel basis.
    """
    m = as_matrix(m)
    rows, cols = shape(m)
    c = [int(x) for x in c]
    if len(c) != rows:
        raise IntLinError(f"right-hand side has length {len(c)}, expected {rows}")
    if cols == 0:
        return ([], []) if not any(c) else None
    # u @ m^T = h  =>  m @ u^T = h^T;  substitute z = u^T @ y
    h, u = hnf(transpose(m))
    piv = hnf_pivots(h)
    r = len(piv)
    y = [0] * cols
    for k, p in enumerate(piv):
        acc = c[p] - sum(h[j][p] * y[j] for j in range(k))
        q, rem = divmod(acc, h[k][p])
        if rem:
            return None
        y[k] = q
    if matvec(transpose(h), y) != c:
        return None
    ut = transpose(u)
    particular = matvec(ut, y)
    kernel = [list(u[k]) for k in range(r, cols)]
    return particular, kernel


def solve_integer_snf(m: Sequence[Sequence[int]], c: Sequence[int]) -> tuple[Vector, list[Vector]] | None:
    """Same contract as :func:`solve_integer`, computed from the SNF."""
    m = as_matrix(m)
    rows, cols = shape(m)
    c = [int(x) for x in c]
    s, u, v = snf(m)
    uc = matvec(u, c)
    y = [0] * cols
    rank = 0
    for i in range(min(rows, cols)):
        if s[i][i] == 0:
            break
        q, rem = divmod(uc[i], s[i][i])
        if rem:
            return None
        y[i] = q
        rank += 1
    if any(uc[i] for i in range(rank, rows)):
        return None
    particular = matvec(v, y)
    kernel = [[v[i][j] for i in range(cols)] for j in range(rank, cols)]
    return particular, kernel


def rank(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 0
    h, _ = hnf(m)
    return len(hnf_pivots(h))


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^n spanned by the rows of ``basis`` (row HNF, no zero rows)."""
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def member(self, v: Sequence[int]) -> bool:
        return member(self, v)

    def index(self) -> int | None:
        return index_in_ambient(self)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical coset representative of ``v`` modulo a full-rank lattice."""
        if self.rank != self.ambient_dim:
            raise IntLinError("coset reduction needs a full-rank lattice")
        w = [int(x) for x in v]
        for row in self.basis:
            j = next(k for k, x in enumerate(row) if x)
            q = w[j] // row[j]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return tuple(w)

    def is_invariant_under(self, mat: Matrix) -> bool:
        return all(self.member(matvec(mat, row)) for row in self.basis)


def lattice_from_vectors(vs: Sequence[Sequence[int]], ambient_dim: int | None = None) -> Lattice:
    vs = [list(map(int, v)) for v in vs]
    if ambient_dim is None:
        if not vs:
            raise IntLinError("ambient dimension needed for an empty spanning set")
        ambient_dim = len(vs[0])
    if any(len(v) != ambient_dim for v in vs):
        raise IntLinError("vectors of mixed length")
    if not vs:
        return Lattice(ambient_dim, ())
    h, _ = hnf(vs)
    r = len(hnf_pivots(h))
    return Lattice(ambient_dim, tuple(tuple(row) for row in h[:r]))


def member(lat: Lattice, v: Sequence[int]) -> bool:
    if len(v) != lat.ambient_dim:
        raise IntLinError("vector length differs from the ambient dimension")
    if lat.rank == 0:
        return not any(v)
    return solve_integer(transpose([list(b) for b in lat.basis]), v) is not None


def index_in_ambient(lat: Lattice) -> int | None:
    if lat.rank != lat.ambient_dim:
        return None
    return abs(det([list(b) for b in lat.basis]))

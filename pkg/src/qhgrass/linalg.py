"""Exact dense linear algebra over the rationals.

Matrices are plain lists of rows; entries are ints or Fractions and never
floats.  Characteristic polynomials come in two independent flavours
(fraction-free elimination and the division-free Berkowitz recursion) so each
can serve as an oracle for the other.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalConsistencyError
from .polynomials import UniPoly

Matrix = list


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(m: int) -> Matrix:
    out = zeros(m, m)
    for i in range(m):
        out[i][i] = 1
    return out


def mat_copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        arow, orow = a[i], out[i]
        for k in range(inner):
            aik = arow[k]
            if aik:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        orow[j] += aik * brow[j]
    return out


def mat_vec(a: Matrix, v: list) -> list:
    out = [0] * len(a)
    for k, vk in enumerate(v):
        if vk:
            for i in range(len(a)):
                aik = a[i][k]
                if aik:
                    out[i] += aik * vk
    return out


def mat_pow(a: Matrix, e: int) -> Matrix:
    result = identity(len(a))
    base = a
    while e > 0:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if e > 1 else base
        e >>= 1
    return result


def trace(a: Matrix):
    return sum(a[i][i] for i in range(len(a)))


def trace_product(a: Matrix, b: Matrix):
    """trace(a @ b) without forming the product."""
    return sum(x * y for arow, bcol in zip(a, zip(*b)) for x, y in zip(arow, bcol))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: Matrix) -> tuple[list[int], Matrix]:
    """Reduced row echelon form; returns (pivot column indices, reduced rows)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots, m[:r]


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[0])


def kernel_basis(a: Matrix) -> list[list]:
    """Basis of the right null space, echelonized so that each vector has a
    leading 1 in the earliest possible coordinate."""
    if not a:
        return []
    cols = len(a[0])
    pivots, red = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        vecs.append(v)
    if not vecs:
        return []
    _, echelon = rref(vecs)
    return echelon


def solve(a: Matrix, b: list) -> list:
    """Solve a @ x = b exactly (a square or tall with full column rank)."""
    cols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    pivots, red = rref(aug)
    if cols in pivots:
        raise InternalConsistencyError("inconsistent linear system")
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    if len(pivots) < cols:
        raise InternalConsistencyError("linear system is underdetermined")
    if any(sum(row[j] * x[j] for j in range(cols)) != bi for row, bi in zip(a, b)):
        raise InternalConsistencyError("exact solve verification failed")
    return x


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise InternalConsistencyError("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


class ColumnSpanSolver:
    """Repeated exact coordinate extraction with respect to a fixed independent
    column family: invert one square subblock up front, verify each solve."""

    def __init__(self, columns: list[list]):
        self.columns = columns
        rows = len(columns[0])
        a = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        pivots, _ = rref([list(r) for r in zip(*a)])  # row-pivot selection via transpose
        if len(pivots) != len(columns):
            raise InternalConsistencyError("columns are not linearly independent")
        self.rows = pivots
        self.inverse = mat_inverse([[a[r][j] for j in range(len(columns))] for r in pivots])
        self.full = a

    def coords(self, target: list) -> list:
        x = mat_vec(self.inverse, [target[r] for r in self.rows])
        if mat_vec(self.full, x) != list(target):
            raise InternalConsistencyError("vector lies outside the column span")
        return x


def det_bareiss(a: Matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev) if isinstance(num, int) and isinstance(prev, int) else (num / prev, 0)
                if r:
                    raise InternalConsistencyError("Bareiss division not exact")
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a: Matrix) -> UniPoly:
    """Monic characteristic polynomial det(xI - a) by fraction-free elimination
    over the polynomial ring."""
    n = len(a)
    m = [[UniPoly([-a[i][j], 1]) if i == j else UniPoly([-a[i][j]]) for j in range(n)] for i in range(n)]
    sign = 1
    prev = UniPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return UniPoly.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev)
            m[i][k] = UniPoly.zero()
        prev = m[k][k]
    out = m[n - 1][n - 1] if n else UniPoly.one()
    if sign < 0:
        out = -out
    if out.leading() != 1:
        raise InternalConsistencyError("characteristic polynomial is not monic")
    return out


def charpoly_berkowitz(a: Matrix) -> UniPoly:
    """Monic characteristic polynomial by the division-free Berkowitz recursion."""
    n = len(a)
    if n == 0:
        return UniPoly.one()
    poly = [1, -a[0][0]]  # highest degree first
    for i in range(1, n):
        sub = [row[:i] for row in a[:i]]
        row_r = a[i][:i]
        col_c = [a[j][i] for j in range(i)]
        diag = a[i][i]
        col = [1, -diag]
        v = col_c
        for _ in range(i):
            col.append(-sum(r * x for r, x in zip(row_r, v)))
            v = mat_vec(sub, v)
        new = [0] * (i + 2)
        for r in range(i + 2):
            acc = 0
            for s in range(min(r, i) + 1):
                if r - s < len(col):
                    acc += col[r - s] * poly[s]
            new[r] = acc
        poly = new
    return UniPoly(list(reversed(poly)))

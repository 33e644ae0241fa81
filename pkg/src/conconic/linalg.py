"""Small dense linear algebra over exact rationals or floats.

Everything here works on plain tuples/lists so both backends share one code
path.  Determinants take three routes: integer matrices go through
fraction-free Bareiss elimination, other exact matrices through Fraction
Gaussian elimination, float matrices through partially pivoted LU.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from .scalars import Scalar, all_exact

Triple = Tuple[Scalar, Scalar, Scalar]


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def transpose3(m):
    return tuple(tuple(m[r][c] for r in range(3)) for c in range(3))


def matvec3(m, v) -> Triple:
    return tuple(dot(row, v) for row in m)


def matmul3(a, b):
    bt = transpose3(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def adjugate3(m):
    """Transposed cofactor matrix; equals det(m) * inverse(m)."""
    c = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            s = [k for k in range(3) if k != j]
            minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
            c[j][i] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(row) for row in c)


def solve3(m, rhs) -> Triple:
    """Cramer solve of a 3x3 system; caller guarantees nonzero determinant."""
    d = det3(m)
    cols = []
    for j in range(3):
        mj = [list(row) for row in m]
        for i in range(3):
            mj[i][j] = rhs[i]
        cols.append(det3(mj))
    if all_exact(cols) and isinstance(d, (int, Fraction)):
        return tuple(Fraction(c, d) for c in cols)
    return tuple(c / d for c in cols)


def row_norm(row: Sequence[Scalar]) -> float:
    return math.sqrt(sum(float(v) * float(v) for v in row))


def _det_bareiss_int(rows: List[List[int]]) -> int:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _det_fraction(rows) -> Fraction:
    n = len(rows)
    m = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return det


def _det_float(rows) -> float:
    n = len(rows)
    m = [[float(v) for v in r] for r in rows]
    det = 1.0
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[pivot_row][k] == 0.0:
            return 0.0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return det


def det(rows) -> Scalar:
    """Determinant of a square matrix in the backend of its entries."""
    flat = [v for r in rows for v in r]
    if all_exact(flat):
        if all(isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1) for v in flat):
            return _det_bareiss_int([[int(v) for v in r] for r in rows])
        return _det_fraction(rows)
    return _det_float(rows)


def normalized_det(rows) -> float:
    """Float determinant divided by the product of Euclidean row norms."""
    norms = [row_norm(r) for r in rows]
    scale = math.prod(norms)
    if scale == 0.0:
        return 0.0
    return _det_float(rows) / scale


def nullspace(rows, ncols: int, eps: float = 0.0):
    """Null space basis of an underdetermined system via Gaussian elimination.

    Exact entries use exact pivots; float entries treat a pivot column as
    zero when its best pivot is below ``eps`` times the largest entry seen.
    Returns a list of null vectors, one per free column.
    """
    flat = [v for r in rows for v in r]
    exact = all_exact(flat)
    if exact:
        m = [[Fraction(v) for v in r] for r in rows]
    else:
        m = [[float(v) for v in r] for r in rows]
        norm_scale = max((abs(v) for r in m for v in r), default=0.0)
    nrows = len(m)
    pivots = []  # (row, col)
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = None
        if exact:
            pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        else:
            best = max(range(r, nrows), key=lambda i: abs(m[i][c]))
            if abs(m[best][c]) > eps * max(norm_scale, 1e-300):
                pivot_row = best
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        m[r] = [v / pivot for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0) if exact else 0.0] * ncols
        vec[fc] = Fraction(1) if exact else 1.0
        for row, col in pivots:
            vec[col] = -m[row][fc]
        basis.append(tuple(vec))
    return basis

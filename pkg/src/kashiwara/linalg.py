"""Dense exact linear algebra over Q(r, s).

Matrices are lists of lists of :class:`Scalar`.  Sizes here are tiny (weight
spaces of height <= 5), so clarity wins over asymptotics.
"""

from __future__ import annotations

from .errors import SingularGram
from .scalars import ONE, ZERO, Scalar


def rref(rows, ncols, column_order=None):
    """Reduced row echelon form.

    ``column_order`` lists column indices in pivot-search priority; the default
    is left to right.  Returns ``(reduced_rows, pivots)`` where ``pivots[k]`` is
    the pivot column of ``reduced_rows[k]``.
    """
    order = list(range(ncols)) if column_order is None else list(column_order)
    m = [list(r) for r in rows]
    pivots = []
    top = 0
    for col in order:
        if top == len(m):
            break
        p = next((i for i in range(top, len(m)) if not m[i][col].is_zero()), None)
        if p is None:
            continue
        m[top], m[p] = m[p], m[top]
        inv = m[top][col].inverse()
        m[top] = [x * inv for x in m[top]]
        for i in range(len(m)):
            if i != top and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
    return m[:top], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0}, one vector per free column (left to right)."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def bareiss_det(matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [list(r) for r in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            p = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if p is None:
                return ZERO
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def bareiss_inverse(matrix):
    """Inverse via fraction-free Gauss-Jordan on ``[A | I]``.

    After elimination the left block is ``det * I`` and the right block is
    ``det * A^-1``; one final division per entry recovers the inverse.
    """
    n = len(matrix)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(matrix)]
    prev = ONE
    for k in range(n):
        if m[k][k].is_zero():
            p = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if p is None:
                raise SingularGram("matrix is singular")
            m[k], m[p] = m[p], m[k]
        pivot = m[k][k]
        for i in range(n):
            if i == k:
                continue
            f = m[i][k]
            m[i] = [(pivot * a - f * b) / prev for a, b in zip(m[i], m[k])]
        prev = pivot
    return [[m[i][n + j] / m[i][i] for j in range(n)] for i in range(n)]


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in zip(*b)] for row in a]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def is_identity(m):
    return all((x.is_one() if i == j else x.is_zero())
               for i, row in enumerate(m) for j, x in enumerate(row))


def to_scalar_matrix(m):
    return [[Scalar(x) for x in row] for row in m]

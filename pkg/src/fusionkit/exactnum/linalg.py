"""Exact linear algebra over Q (lists of lists of Fraction) and over Z.

Small and dense by design: the matrices here are multiplication tables of number
fields (degree <= ~16) and regular representations of fusion rings (rank-capped).
"""
from __future__ import annotations

from fractions import Fraction

from .intpoly import IntPoly


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out


def charpoly(mat) -> list:
    """Characteristic polynomial det(xI - M), constant term first.

    Faddeev-LeVerrier; exact for int or Fraction entries (the trace divisions are
    exact over Z when the matrix is integral).
    """
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    b = [list(row) for row in mat]
    c = None
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                b[i][i] += c
            b = mat_mul(mat, b)
        tr = sum(b[i][i] for i in range(n))
        if isinstance(tr, Fraction):
            c = -tr / k
        else:
            assert tr % k == 0
            c = -(tr // k)
        coeffs[n - k] = c
    return coeffs


def _is_int_matrix(mat):
    return all(isinstance(v, int) for row in mat for v in row)


def charpoly_int(mat) -> IntPoly:
    return IntPoly(charpoly([[int(v) for v in row] for row in mat]))


def rref(mat):
    """Row-reduce a Fraction matrix in place-copy; returns (rrefmat, pivot_columns)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def kernel_basis(mat):
    """Basis of the right kernel of a Fraction matrix, as lists of Fractions."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve(mat, rhs):
    """Solve mat @ x = rhs over Q; returns one solution or None if inconsistent."""
    rows = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(rows)]
    red, pivots = rref(aug)
    cols = len(mat[0])
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def det_bareiss_int(mat) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    m = [list(map(int, row)) for row in mat]
    n = len(m)
    if n == 0:
        return 1
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
    return sign * m[n - 1][n - 1]


def resultant_int(p: IntPoly, q: IntPoly) -> int:
    """Resultant of two integer polynomials via the Sylvester matrix."""
    dp, dq = p.degree, q.degree
    if dp < 0 or dq < 0:
        return 0
    if dp == 0:
        return p.coeffs[0] ** dq
    if dq == 0:
        return q.coeffs[0] ** dp
    n = dp + dq
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (n - dq - 1 - i))
    return det_bareiss_int(rows)


def lagrange_interpolate(points):
    """Interpolating polynomial through (x, y) Fraction pairs, constant term first."""
    out = ()
    from .intpoly import q_add, q_mul

    for i, (xi, yi) in enumerate(points):
        term = (Fraction(yi),)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = q_mul(term, (Fraction(-xj, 1) / (xi - xj), Fraction(1, 1) / (xi - xj)))
        out = q_add(out, term)
    return out

"""Bulk exact cyclotomic linear algebra on numpy integer tensors.

An array of Q(zeta_n) values is stored as an integer coefficient tensor of shape
(..., phi(n)) over one common denominator.  Products are coefficient convolutions
contracted through the per-conductor reduction tensor; everything stays integral.
Contractions run in int64 when a proven bound fits, otherwise in object dtype
(arbitrary precision) - results are exact either way.
"""
from __future__ import annotations

import functools
import math

import numpy as np

from .cyclotomic import Cyclotomic, _tables

INT64_SAFE = 2**62


@functools.lru_cache(maxsize=None)
def np_tables(n: int):
    """(phi, reduction tensor R[a,b,:] = zeta^{a+b} in basis, conj matrix, max |entry|)."""
    phi, pows = _tables(n)
    red = np.zeros((phi, phi, phi), dtype=np.int64)
    for a in range(phi):
        for b in range(phi):
            red[a, b, :] = pows[(a + b) % n]
    conj = np.zeros((phi, phi), dtype=np.int64)
    for j in range(phi):
        conj[j, :] = pows[(n - j) % n]
    maxr = int(np.abs(red).max())
    return phi, red, conj, maxr


class CycArray:
    """An ndarray of cyclotomic values at a fixed conductor, exact."""

    __slots__ = ("n", "den", "c")

    def __init__(self, n: int, coeffs: np.ndarray, den: int = 1):
        self.n = n
        self.c = coeffs
        self.den = int(den)

    @property
    def shape(self):
        return self.c.shape[:-1]

    @staticmethod
    def from_scalars(rows, n: int) -> "CycArray":
        """Build a matrix (or vector) from nested Cyclotomic scalars, lifted to conductor n."""
        if rows and isinstance(rows[0], Cyclotomic):
            shape = (len(rows),)
            flat = [s.lift(n) for s in rows]
        else:
            shape = (len(rows), len(rows[0]))
            flat = [s.lift(n) for row in rows for s in row]
        den = 1
        for s in flat:
            den = den * s.den // math.gcd(den, s.den)
        phi, _, _, _ = np_tables(n)
        arr = np.zeros((len(flat), phi), dtype=object)
        for i, s in enumerate(flat):
            f = den // s.den
            arr[i, :] = [v * f for v in s.num]
        return CycArray(n, _compact(arr.reshape(shape + (phi,))), den)

    def scalar(self, *index) -> Cyclotomic:
        vec = self.c[index]
        return Cyclotomic(self.n, [int(v) for v in vec], self.den)

    def conj(self) -> "CycArray":
        phi, _, conjmat, _ = np_tables(self.n)
        out = _contract_last(self.c, conjmat)
        return CycArray(self.n, _compact(out), self.den)

    def max_abs(self) -> int:
        if self.c.size == 0:
            return 0
        return int(np.abs(self.c.astype(object)).max())

    def normalized(self) -> "CycArray":
        """Divide out the gcd of all entries and the denominator."""
        g = self.den
        for v in self.c.flat:
            g = math.gcd(g, abs(int(v)))
            if g == 1:
                return self
        if g <= 1:
            return self
        if self.c.dtype == object:
            out = np.array([int(v) // g for v in self.c.flat], dtype=object).reshape(self.c.shape)
        else:
            out = self.c // g
        return CycArray(self.n, _compact(out), self.den // g)

    def equal_array(self, other: "CycArray") -> np.ndarray:
        """Boolean array of entrywise equality (conductors must match)."""
        assert self.n == other.n
        a, b = self.normalized(), other.normalized()
        lcm = a.den * b.den // math.gcd(a.den, b.den)
        fa, fb = lcm // a.den, lcm // b.den
        return np.all(a.c.astype(object) * fa == b.c.astype(object) * fb, axis=-1)


def _compact(arr: np.ndarray) -> np.ndarray:
    """Store as int64 when every entry fits, else object."""
    if arr.dtype != object:
        return arr.astype(np.int64)
    if arr.size == 0:
        return arr.astype(np.int64)
    m = max(abs(int(v)) for v in arr.flat)
    if m < INT64_SAFE:
        return arr.astype(np.int64)
    return arr


def _contract_last(arr: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """arr[..., a] @ mat[a, e] with overflow-aware dtype choice."""
    if arr.dtype == object or mat.dtype == object:
        return np.tensordot(arr.astype(object), mat.astype(object), axes=([arr.ndim - 1], [0]))
    bound = int(np.abs(arr).max(initial=0)) * int(np.abs(mat).max(initial=0)) * arr.shape[-1]
    if bound < INT64_SAFE:
        return np.tensordot(arr, mat, axes=([arr.ndim - 1], [0]))
    return np.tensordot(arr.astype(object), mat.astype(object), axes=([arr.ndim - 1], [0]))


def _product_dtype(a: CycArray, b: CycArray, contraction: int):
    phi, _, _, maxr = np_tables(a.n)
    bound = a.max_abs() * b.max_abs() * contraction * phi * phi * maxr
    return np.int64 if bound < INT64_SAFE else object


def mul_elementwise(a: CycArray, b: CycArray) -> CycArray:
    """Entrywise product with numpy broadcasting across the leading axes."""
    assert a.n == b.n
    phi, red, _, _ = np_tables(a.n)
    dt = _product_dtype(a, b, 1)
    ac = a.c.astype(dt, copy=False)
    bc = b.c.astype(dt, copy=False)
    conv = np.einsum("...a,...b->...ab", ac, bc)
    out = conv.reshape(conv.shape[:-2] + (phi * phi,)) @ red.reshape(phi * phi, phi).astype(dt, copy=False)
    return CycArray(a.n, _compact(out), a.den * b.den)


def gram(a: CycArray, b: CycArray) -> CycArray:
    """G[i, j] = sum_k a[i, k] * b[j, k] for 2-D cyclotomic matrices."""
    assert a.n == b.n
    phi, red, _, _ = np_tables(a.n)
    r = a.c.shape[1]
    dt = _product_dtype(a, b, r)
    ac = a.c.astype(dt, copy=False)
    bc = b.c.astype(dt, copy=False)
    t = np.einsum("ika,jkb->ijab", ac, bc)
    out = t.reshape(t.shape[0], t.shape[1], phi * phi) @ red.reshape(phi * phi, phi).astype(dt, copy=False)
    return CycArray(a.n, _compact(out), a.den * b.den)


def row_outer(a_row: np.ndarray, b: np.ndarray, n: int, dt) -> np.ndarray:
    """P[j, m, e] = a_row[m] * b[j, m] as coefficient tensors (one fixed row)."""
    phi, red, _, _ = np_tables(n)
    t = np.einsum("ma,jmb->jmab", a_row.astype(dt, copy=False), b.astype(dt, copy=False))
    return t.reshape(t.shape[0], t.shape[1], phi * phi) @ red.reshape(phi * phi, phi).astype(dt, copy=False)

"""Fusion rings: validation of the based-ring axioms and exact FP dimensions.

A fusion ring is a based ring with nonnegative integer structure constants
N_{ij}^k, a unit basis element, and a duality involution satisfying Frobenius
reciprocity.  Frobenius-Perron dimensions are computed as the unique positive
eigenvector of the regular element, exactly, in the number field generated by
one Perron root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ComputationError, InvalidInput, ResourceLimit
from .exactnum.intpoly import IntPoly, factor_rational
from .exactnum.linalg import charpoly_int
from .exactnum.numberfield import NFElement, NumberField
from .exactnum.realalg import RealAlgebraic, real_roots

RANK_CAP = 64  # exact char-poly factorization cost grows fast; override per call


class FusionRing:
    """Immutable fusion-ring data on index set {0, ..., rank-1}.

    nconst holds only the nonzero N_{ij}^k; labels are opaque identifiers used
    for file round-trips, never by algorithms.
    """

    def __init__(self, rank: int, labels, unit: int, dual, nconst):
        if rank < 1:
            raise InvalidInput("rank must be positive")
        labels = tuple(str(x) for x in labels)
        if len(labels) != rank or len(set(labels)) != rank:
            raise InvalidInput("labels must be rank distinct identifiers")
        if not (0 <= unit < rank):
            raise InvalidInput("unit index out of range")
        dual = tuple(int(d) for d in dual)
        if len(dual) != rank or sorted(dual) != list(range(rank)):
            raise InvalidInput("dual must be a permutation of the index set")
        clean = {}
        for (i, j, k), v in dict(nconst).items():
            v = int(v)
            if v < 0:
                raise InvalidInput(f"negative structure constant at {(i, j, k)}")
            if not all(0 <= t < rank for t in (i, j, k)):
                raise InvalidInput(f"index out of range in {(i, j, k)}")
            if v:
                clean[(int(i), int(j), int(k))] = v
        self.rank = rank
        self.labels = labels
        self.unit = int(unit)
        self.dual = dual
        self.nconst = clean
        self._dense = None

    def N(self, i: int, j: int, k: int) -> int:
        return self.nconst.get((i, j, k), 0)

    def dense(self) -> np.ndarray:
        """The full tensor N[i, j, k], materialized on demand."""
        if self._dense is None:
            t = np.zeros((self.rank, self.rank, self.rank), dtype=np.int64)
            for (i, j, k), v in self.nconst.items():
                t[i, j, k] = v
            self._dense = t
        return self._dense

    def fusion_matrix(self, i: int) -> np.ndarray:
        """Left-multiplication matrix of X_i acting on the basis: M[l, k] = N_{ik}^l."""
        return self.dense()[i].T.copy()

    def is_pointed(self) -> bool:
        """Every (i, j) product is a single basis element with multiplicity 1."""
        d = self.dense()
        return bool(np.all(d.sum(axis=2) == 1) and d.max() == 1)

    def pointed_table(self) -> np.ndarray:
        if not self.is_pointed():
            raise InvalidInput("ring is not pointed")
        return np.argmax(self.dense(), axis=2)

    def restrict(self, members) -> "FusionRing":
        """The fusion subring on a fusion-closed, dual-closed member set containing the unit."""
        members = sorted(members)
        pos = {m: t for t, m in enumerate(members)}
        if self.unit not in pos:
            raise InvalidInput("subring must contain the unit")
        nconst = {}
        for (i, j, k), v in self.nconst.items():
            if i in pos and j in pos:
                if k not in pos:
                    raise InvalidInput("member set is not closed under fusion")
                nconst[(pos[i], pos[j], pos[k])] = v
        return FusionRing(len(members), [self.labels[m] for m in members], pos[self.unit],
                          [pos[self.dual[m]] for m in members], nconst)

    def with_entry(self, i: int, j: int, k: int, value: int) -> "FusionRing":
        """Copy with one structure constant replaced (mutation fixtures)."""
        nconst = dict(self.nconst)
        if value:
            nconst[(i, j, k)] = value
        else:
            nconst.pop((i, j, k), None)
        return FusionRing(self.rank, self.labels, self.unit, self.dual, nconst)

    def __eq__(self, other):
        return (isinstance(other, FusionRing)
                and (self.rank, self.labels, self.unit, self.dual) ==
                    (other.rank, other.labels, other.unit, other.dual)
                and self.nconst == other.nconst)

    def __repr__(self):
        return f"FusionRing(rank={self.rank}, labels={self.labels})"


@dataclass(frozen=True)
class Violation:
    axiom: str          # unit | duality | reciprocity | associativity | structure
    indices: tuple
    detail: str

    def __str__(self):
        return f"[{self.axiom}] at {self.indices}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_violated(self):
        return sorted({v.axiom for v in self.violations})

    def __str__(self):
        if self.ok:
            return "valid: all fusion-ring axioms hold"
        return "\n".join(str(v) for v in self.violations)


def _first_indices(mask: np.ndarray, limit: int = 8):
    idx = np.argwhere(mask)
    return [tuple(int(t) for t in row) for row in idx[:limit]]


def validate(ring: FusionRing) -> ValidationReport:
    """Check every fusion-ring axiom; violations are data, not exceptions."""
    out = []
    r, u = ring.rank, ring.unit
    n = ring.dense()
    eye = np.eye(r, dtype=np.int64)

    bad = n[u] != eye
    for idx in _first_indices(bad):
        out.append(Violation("unit", (u,) + idx, f"N[u,j,k]={int(n[u][idx])} breaks left unit law"))
    bad = n[:, u, :] != eye
    for idx in _first_indices(bad):
        out.append(Violation("unit", (idx[0], u, idx[1]),
                             f"N[i,u,k]={int(n[idx[0], u, idx[1]])} breaks right unit law"))

    dual = np.array(ring.dual)
    if ring.dual[u] != u:
        out.append(Violation("duality", (u,), "dual(unit) != unit"))
    bad_inv = dual[dual] != np.arange(r)
    for (i,) in _first_indices(bad_inv):
        out.append(Violation("duality", (i,), "dual is not an involution"))

    # N_{ij}^unit = delta_{j, i*}
    expected = np.zeros((r, r), dtype=np.int64)
    expected[np.arange(r), dual] = 1
    bad = n[:, :, u] != expected
    for idx in _first_indices(bad):
        out.append(Violation("duality", idx + (u,),
                             f"N[i,j,u]={int(n[idx[0], idx[1], u])}, expected {int(expected[idx])}"))

    # Frobenius reciprocity: N_{ij}^k = N_{i*k}^j = N_{kj*}^i.
    left = n[dual][:, :, :].transpose(0, 2, 1)      # left[i,j,k] = N_{i* k}^{j}
    right = n[:, dual, :].transpose(2, 1, 0)        # right[i,j,k] = N_{k j*}^{i}
    for idx in _first_indices(n != left):
        out.append(Violation("reciprocity", idx, "N_ij^k != N_{i*k}^j"))
    for idx in _first_indices(n != right):
        out.append(Violation("reciprocity", idx, "N_ij^k != N_{k j*}^i"))

    out.extend(_associativity_violations(ring))
    return ValidationReport(out)


def _associativity_violations(ring: FusionRing):
    n = ring.dense()
    r = ring.rank
    if ring.is_pointed():
        t = ring.pointed_table()
        lhs = t[t, :]           # lhs[i,j,k] = t[t[i,j], k]
        rhs = t[:, t].reshape(r, r, r)  # rhs[i,j,k] = t[i, t[j,k]]
        bad = lhs != rhs
        return [Violation("associativity", idx + ("*",), "group table not associative")
                for idx in _first_indices(bad)]
    out = []
    # For each i: sum_m N_ij^m N_mk^l  vs  sum_m N_jk^m N_im^l, all (j,k,l).
    for i in range(r):
        lhs = np.tensordot(n[i], n, axes=(1, 0))      # [j,k,l]
        rhs = np.tensordot(n, n[i], axes=(2, 0))      # [j,k,l]
        bad = lhs != rhs
        if bad.any():
            for idx in _first_indices(bad):
                out.append(Violation("associativity", (i,) + idx,
                                     f"sides differ: {int(lhs[idx])} vs {int(rhs[idx])}"))
        if len(out) >= 8:
            break
    return out


@dataclass
class DimensionVector:
    """Exact FP dimensions inside Q(t), t the Perron root of the regular element."""

    field: NumberField
    dims: tuple          # NFElement per basis element
    total: NFElement     # sum of squares

    @property
    def field_minpoly(self) -> IntPoly:
        return self.field.minpoly

    def interval_for_t(self):
        return self.field.root.lo, self.field.root.hi

    def dim_real(self, i: int) -> RealAlgebraic:
        return self.dims[i].to_real_algebraic()

    def total_real(self) -> RealAlgebraic:
        return self.total.to_real_algebraic()

    def dim_fraction(self, i: int) -> Fraction:
        return self.dims[i].as_fraction()


def _kernel_over_field(rows, field: NumberField):
    """Right kernel basis of a matrix of NFElements, by Gaussian elimination."""
    m = [list(row) for row in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    rpos = 0
    for c in range(ncols):
        piv = next((i for i in range(rpos, nrows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[rpos], m[piv] = m[piv], m[rpos]
        inv = m[rpos][c].inverse()
        m[rpos] = [v * inv for v in m[rpos]]
        for i in range(nrows):
            if i != rpos and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[rpos])]
        pivots.append(c)
        rpos += 1
        if rpos == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero, one = field.rational(0), field.rational(1)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def fp_dims(ring: FusionRing, rank_cap: int = RANK_CAP) -> DimensionVector:
    """Exact Frobenius-Perron dimensions (caller guarantees the ring validates).

    d is the unique positive eigenvector of the regular element normalized at the
    unit; the homomorphism law is re-verified exactly before returning.
    """
    r = ring.rank
    if ring.is_pointed():
        # Every basis element invertible: the all-ones vector is the positive character.
        field = NumberField(IntPoly([-r, 1]), r, r)
        one = field.rational(1)
        return DimensionVector(field, tuple([one] * r), field.rational(r))
    if r > rank_cap:
        raise ResourceLimit(f"rank {r} exceeds fp_dims cap {rank_cap}")

    reg = ring.dense().sum(axis=0)            # reg[j, k] = sum_i N_{ij}^k
    cp = charpoly_int([[int(v) for v in row] for row in reg])
    factors = [f for f, _ in factor_rational(cp) if f.degree >= 1]
    best = None
    best_root = None
    for f in factors:
        roots = real_roots(f)
        if roots and (best_root is None or roots[-1] > best_root):
            best_root = roots[-1]
            best = f
    if best is None:
        raise ComputationError("regular element has no real eigenvalue")
    field = NumberField(best, best_root.lo, best_root.hi)
    t = field.generator()

    rows = [[field.rational(int(reg[j][k])) - (t if j == k else field.rational(0))
             for k in range(r)] for j in range(r)]
    kernel = _kernel_over_field(rows, field)
    if len(kernel) != 1:
        raise ComputationError(f"Perron eigenspace has dimension {len(kernel)}, expected 1")
    vec = kernel[0]
    if vec[ring.unit].is_zero():
        raise ComputationError("Perron eigenvector vanishes at the unit")
    inv = vec[ring.unit].inverse()
    dims = tuple(v * inv for v in vec)

    for i, d in enumerate(dims):
        if d.sign() <= 0:
            raise ComputationError(f"FP dimension of basis element {i} is not positive")
    for i in range(r):
        if dims[ring.dual[i]] != dims[i]:
            raise ComputationError(f"d_dual({i}) != d_{i}")
    for i in range(r):
        for j in range(r):
            rhs = field.rational(0)
            for k in range(r):
                v = ring.N(i, j, k)
                if v:
                    rhs = rhs + v * dims[k]
            if dims[i] * dims[j] != rhs:
                raise ComputationError(f"homomorphism law fails at ({i}, {j})")
    total = field.rational(0)
    for d in dims:
        total = total + d * d
    return DimensionVector(field, dims, total)


INTEGRAL = "Integral"
WEAKLY_INTEGRAL_ONLY = "WeaklyIntegralOnly"
NOT_WEAKLY_INTEGRAL = "NotWeaklyIntegral"


def integrality_class(ring: FusionRing, dv: DimensionVector | None = None) -> str:
    """Integral / WeaklyIntegralOnly / NotWeaklyIntegral, decided exactly."""
    dv = dv or fp_dims(ring)
    all_int = all(d.is_rational_integer() for d in dv.dims)
    if all_int:
        return INTEGRAL
    if dv.total.is_rational_integer():
        # Weakly integral: every squared dimension must be a rational integer.
        for i, d in enumerate(dv.dims):
            if not (d * d).is_rational_integer():
                raise ComputationError(
                    f"weakly integral ring with non-integral d_{i}^2; input is not a fusion ring")
        return WEAKLY_INTEGRAL_ONLY
    return NOT_WEAKLY_INTEGRAL


def deligne_product(a: FusionRing, b: FusionRing) -> FusionRing:
    """Product ring on pairs: multiplicities multiply, unit and duality componentwise."""
    rank = a.rank * b.rank

    def idx(i, p):
        return i * b.rank + p

    labels = [f"{la}.{lb}" for la in a.labels for lb in b.labels]
    if len(set(labels)) != rank:
        labels = [f"x{i}.{p}" for i in range(a.rank) for p in range(b.rank)]
    dual = [0] * rank
    for i in range(a.rank):
        for p in range(b.rank):
            dual[idx(i, p)] = idx(a.dual[i], b.dual[p])
    nconst = {}
    for (i, j, k), v in a.nconst.items():
        for (p, q, s), w in b.nconst.items():
            nconst[(idx(i, p), idx(j, q), idx(k, s))] = v * w
    return FusionRing(rank, labels, idx(a.unit, b.unit), dual, nconst)

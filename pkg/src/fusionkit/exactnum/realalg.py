"""Exact real algebraic numbers: irreducible minimal polynomial + isolating interval.

Signs and comparisons are decided by interval refinement (bisection with exact
rational endpoint evaluation); refinement never changes the identified root.
Sums and products across different fields go through integer resultants computed
by evaluation/interpolation with fraction-free determinants, then root selection
by interval arithmetic.
"""
from __future__ import annotations

import functools
from fractions import Fraction

from ..errors import ComputationError, InvalidInput
from .intpoly import (IntPoly, count_roots_in, factor_rational, from_fractions,
                      root_bound, sturm_chain)
from .linalg import lagrange_interpolate, resultant_int


class RealAlgebraic:
    """A real root of an irreducible primitive integer polynomial, isolated by
    a rational interval [lo, hi] with p(lo), p(hi) of opposite sign (or the root
    itself as a degenerate rational endpoint for degree-1 polynomials)."""

    __slots__ = ("minpoly", "lo", "hi")

    def __init__(self, minpoly: IntPoly, lo: Fraction, hi: Fraction, _checked=False):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise InvalidInput("empty isolating interval")
        if not _checked:
            if minpoly != minpoly.primitive():
                raise InvalidInput("minimal polynomial must be primitive with positive leading coefficient")
            if minpoly.degree < 1:
                raise InvalidInput("minimal polynomial must be nonconstant")
            if minpoly.degree == 1:
                root = Fraction(-minpoly.coeffs[0], minpoly.coeffs[1])
                if not (lo <= root <= hi):
                    raise InvalidInput("interval does not contain the rational root")
                lo = hi = root
            else:
                chain = sturm_chain(minpoly)
                lo, hi = _shrink_to_open(minpoly, chain, lo, hi)
        object.__setattr__(self, "minpoly", minpoly)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RealAlgebraic is immutable; refine() returns a new value")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(value) -> "RealAlgebraic":
        value = Fraction(value)
        p = IntPoly([-value.numerator, value.denominator]).primitive()
        return RealAlgebraic(p, value, value, _checked=True)

    @staticmethod
    def sqrt_of(value) -> "RealAlgebraic":
        """The nonnegative square root of a nonnegative rational."""
        value = Fraction(value)
        if value < 0:
            raise InvalidInput("square root of a negative rational")
        import math

        rn, rd = math.isqrt(value.numerator), math.isqrt(value.denominator)
        if rn * rn == value.numerator and rd * rd == value.denominator:
            return RealAlgebraic.from_rational(Fraction(rn, rd))
        p = from_fractions((-value, 0, 1))
        bound = max(Fraction(1), value)
        return RealAlgebraic(p, Fraction(0), bound)

    # -- structure -------------------------------------------------------------

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInput("not a rational value")
        return self.lo

    def is_algebraic_integer(self) -> bool:
        return self.minpoly.is_monic()

    def refine(self, width: Fraction) -> "RealAlgebraic":
        """Return the same number with an isolating interval of at most the given width."""
        lo, hi = self.lo, self.hi
        if hi - lo <= width:
            return self
        p = self.minpoly
        slo = _sign(p(lo))
        while hi - lo > width:
            mid = (lo + hi) / 2
            smid = _sign(p(mid))
            if smid == 0:
                lo = hi = mid
                break
            if smid == slo:
                lo = mid
            else:
                hi = mid
        return RealAlgebraic(p, lo, hi, _checked=True)

    def sign(self) -> int:
        if self.is_rational():
            v = self.as_fraction()
            return (v > 0) - (v < 0)
        cur = self
        while cur.lo < 0 < cur.hi:
            cur = cur.refine((cur.hi - cur.lo) / 4)
        if cur.lo >= 0 and cur.hi <= 0:
            return 0
        return 1 if cur.lo >= 0 else -1

    def _root_index(self) -> int:
        roots = _roots_of_irreducible(self.minpoly)
        cur = self
        while True:
            hits = [k for k, r in enumerate(roots) if _overlap(cur, r)]
            if len(hits) == 1:
                return hits[0]
            cur = cur.refine((cur.hi - cur.lo) / 4)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self.is_rational():
            return self.lo == other.lo
        return self._root_index() == other._root_index()

    def __hash__(self):
        return hash((self.minpoly, self._root_index() if not self.is_rational() else self.lo))

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if self == other:
            return False
        a, b = self, other
        while _overlap(a, b):
            a = a.refine((a.hi - a.lo) / 4 if a.hi > a.lo else Fraction(1))
            b = b.refine((b.hi - b.lo) / 4 if b.hi > b.lo else Fraction(1))
        return a.hi < b.lo

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not (self <= other)

    def __ge__(self, other):
        return not (self < other)

    # -- arithmetic ------------------------------------------------------------

    def __neg__(self):
        p = IntPoly([(-1) ** i * c for i, c in enumerate(self.minpoly.coeffs)]).primitive()
        return RealAlgebraic(p, -self.hi, -self.lo, _checked=True)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self
            return RealAlgebraic(self.minpoly.shift(c), self.lo + c, self.hi + c, _checked=True)
        if self.is_rational():
            return other + self.as_fraction()
        if other.is_rational():
            return self + other.as_fraction()
        return _binary_op(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RealAlgebraic):
            return self + (-other)
        return self + (-Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return RealAlgebraic.from_rational(0)
            lo, hi = sorted((self.lo * c, self.hi * c))
            return RealAlgebraic(self.minpoly.scale_roots(c), lo, hi, _checked=True)
        if self.is_rational():
            return other * self.as_fraction()
        if other.is_rational():
            return self * other.as_fraction()
        return _binary_op(self, other, "mul")

    __rmul__ = __mul__

    def square(self) -> "RealAlgebraic":
        if self.is_rational():
            return RealAlgebraic.from_rational(self.as_fraction() ** 2)
        cand = self.minpoly.even_part_in_square()
        return _select_root(cand, [self], lambda ops: _square_interval(ops[0]))

    def inverse(self) -> "RealAlgebraic":
        if self.sign() == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return RealAlgebraic.from_rational(1 / self.as_fraction())
        cur = self
        while cur.lo <= 0 <= cur.hi:
            cur = cur.refine((cur.hi - cur.lo) / 4)
        p = cur.minpoly.reversed_coeffs()
        lo, hi = sorted((1 / cur.lo, 1 / cur.hi))
        return RealAlgebraic(p, lo, hi)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RealAlgebraic.from_rational(other) / self

    def interval(self):
        return self.lo, self.hi

    def __repr__(self):
        mid = (self.lo + self.hi) / 2
        return f"RealAlgebraic({self.minpoly!r} in [{self.lo}, {self.hi}] ~ {float(mid):.6g})"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _overlap(a, b) -> bool:
    return a.lo <= b.hi and b.lo <= a.hi


def _shrink_to_open(p: IntPoly, chain, lo: Fraction, hi: Fraction):
    """Validate/normalize an isolating interval: exactly one root, endpoint signs opposite."""
    if p(lo) == 0 or p(hi) == 0:
        raise InvalidInput("degree >= 2 irreducible polynomial cannot have rational roots")
    if count_roots_in(chain, lo, hi) != 1:
        raise InvalidInput("interval does not isolate exactly one root")
    return lo, hi


@functools.lru_cache(maxsize=None)
def _roots_of_irreducible(p: IntPoly):
    """Isolating intervals for all real roots of an irreducible polynomial, increasing."""
    if p.degree == 1:
        return (RealAlgebraic.from_rational(Fraction(-p.coeffs[0], p.coeffs[1])),)
    chain = sturm_chain(p)
    bound = root_bound(p)
    total = count_roots_in(chain, -bound, bound)
    out = []

    def isolate(lo, hi, count):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        left = count_roots_in(chain, lo, mid)
        isolate(lo, mid, left)
        isolate(mid, hi, count - left)

    isolate(-bound, bound, total)
    out.sort()
    return tuple(RealAlgebraic(p, lo, hi, _checked=True) for lo, hi in out)


def real_roots(p: IntPoly):
    """All distinct real roots of p in increasing order, one RealAlgebraic each.

    Multiplicities are discarded; each returned root carries its irreducible
    minimal polynomial.
    """
    if p.is_zero():
        raise InvalidInput("zero polynomial has no well-defined root set")
    roots = []
    for fac, _mult in factor_rational(p):
        if fac.degree >= 1:
            roots.extend(_roots_of_irreducible(fac))
    # Roots of distinct irreducible factors are pairwise distinct, so ordering only
    # ever needs interval separation, never the equality test.
    import functools as _ft

    def _cmp(a, b):
        if a.minpoly == b.minpoly and a.lo == b.lo and a.hi == b.hi:
            return 0
        x, y = a, b
        while _overlap(x, y):
            x = x.refine((x.hi - x.lo) / 4 if x.hi > x.lo else Fraction(1))
            y = y.refine((y.hi - y.lo) / 4 if y.hi > y.lo else Fraction(1))
        return -1 if x.hi < y.lo else 1

    roots.sort(key=_ft.cmp_to_key(_cmp))
    return roots


def _interval_sum(a, b):
    return a.lo + b.lo, a.hi + b.hi


def _interval_prod(a, b):
    cand = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return min(cand), max(cand)


def _square_interval(a):
    lo, hi = sorted((a.lo * a.lo, a.hi * a.hi))
    if a.lo < 0 < a.hi:
        lo = Fraction(0)
    return lo, hi


def _resultant_poly(p: IntPoly, q: IntPoly, op: str) -> IntPoly:
    """Integer polynomial whose roots include {x op y : p(x)=0, q(y)=0}.

    op 'add': R(z) = Res_y(p(y), q(z - y)); op 'mul': R(z) = Res_y(p(y), y^d q(z/y)).
    Computed by evaluation at integer points + Lagrange interpolation.
    """
    dp, dq = p.degree, q.degree
    deg = dp * dq
    points = []
    z0 = 0
    while len(points) <= deg:
        if op == "add":
            # q(z0 - y) as an integer polynomial in y, by Horner in (z0 - y).
            comp = IntPoly()
            lin = IntPoly([z0, -1])
            for c in reversed(q.coeffs):
                comp = comp * lin + IntPoly([c])
        else:
            # y^dq * q(z0/y): coefficient of y^k is q_{dq-k} * z0^{dq-k}.
            # q(0) != 0 since q is irreducible and the zero operand is handled upstream.
            comp = IntPoly([q.coeffs[dq - k] * z0 ** (dq - k) for k in range(dq + 1)])
        r = resultant_int(p, comp)
        points.append((Fraction(z0), Fraction(r)))
        z0 = -z0 if z0 > 0 else -z0 + 1
    coeffs = lagrange_interpolate(points)
    out = from_fractions(coeffs)
    if out.is_zero():
        raise ComputationError("resultant vanished identically")
    return out


def _select_root(candidate_poly: IntPoly, operands, interval_of) -> RealAlgebraic:
    """Pick the unique root of candidate_poly inside the shrinking exact enclosure.

    interval_of(operands) must always enclose the exact result, and its width must
    tend to zero as the operand intervals are refined; the exact result is a root
    of candidate_poly, so eventually exactly one candidate root survives.
    """
    roots = list(real_roots(candidate_poly))
    for _ in range(512):
        lo, hi = interval_of(operands)
        hits = [r for r in roots if r.lo <= hi and lo <= r.hi]
        if len(hits) == 1:
            root = hits[0]
            return RealAlgebraic(root.minpoly, max(root.lo, lo), min(root.hi, hi), _checked=True)
        operands = [o.refine((o.hi - o.lo) / 4 if o.hi > o.lo else Fraction(1)) for o in operands]
        roots = [r.refine((r.hi - r.lo) / 4 if r.hi > r.lo else Fraction(1)) for r in roots]
    raise ComputationError("root selection did not converge")


def _binary_op(a: RealAlgebraic, b: RealAlgebraic, op: str) -> RealAlgebraic:
    cand = _resultant_poly(a.minpoly, b.minpoly, op)
    fn = _interval_sum if op == "add" else _interval_prod
    return _select_root(cand, [a, b], lambda ops: fn(ops[0], ops[1]))

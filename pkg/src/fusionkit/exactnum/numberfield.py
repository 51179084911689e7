"""Arithmetic in a real number field Q(t) = Q[x]/(p) with t a designated real root.

This is the carrier for Frobenius-Perron dimension vectors: one Perron root t
generates a field containing every dimension, so all dimension arithmetic is
polynomial arithmetic modulo p.  Unlike cyclotomic fields, Z[t] need not be the
maximal order, so algebraic integrality is decided by the characteristic
polynomial of the multiplication map.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ComputationError, InvalidInput
from . import enclosure
from .intpoly import IntPoly, from_fractions, q_divmod, q_mul, q_trim, q_xgcd
from .linalg import charpoly, kernel_basis
from .realalg import RealAlgebraic


class NumberField:
    """Q[x]/(p) with a designated real root t isolated by a rational interval."""

    def __init__(self, minpoly: IntPoly, lo, hi):
        if minpoly.degree < 1:
            raise InvalidInput("field polynomial must be nonconstant")
        self.minpoly = minpoly
        self.root = RealAlgebraic(minpoly, Fraction(lo), Fraction(hi))
        self._monic = tuple(Fraction(c, minpoly.leading) for c in minpoly.coeffs)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def __eq__(self, other):
        return (isinstance(other, NumberField) and self.minpoly == other.minpoly
                and self.root == other.root)

    def __hash__(self):
        return hash((self.minpoly, self.root.lo, self.root.hi))

    def element(self, coeffs) -> "NFElement":
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            _, rem = q_divmod(tuple(coeffs), self._monic)
            coeffs = list(rem)
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return NFElement(self, tuple(coeffs[: self.degree]))

    def rational(self, value) -> "NFElement":
        return self.element([Fraction(value)])

    def generator(self) -> "NFElement":
        if self.degree == 1:
            return self.rational(self.root.as_fraction())
        return self.element([0, 1])

    def refine_root(self, width: Fraction):
        self.root = self.root.refine(width)


class NFElement:
    """An element of a NumberField, as a reduced polynomial in t over Q."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other) -> "NFElement":
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        if not isinstance(other, NFElement) or other.field is not self.field and other.field != self.field:
            raise InvalidInput("operands live in different number fields")
        return other

    def __eq__(self, other):
        other = self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInput("not a rational value")
        return self.coeffs[0]

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def __add__(self, other):
        other = self._check(other)
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return NFElement(self.field, tuple(c * f for c in self.coeffs))
        other = self._check(other)
        prod = q_mul(q_trim(self.coeffs), q_trim(other.coeffs))
        _, rem = q_divmod(prod, self.field._monic)
        rem = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return NFElement(self.field, tuple(rem[: self.field.degree]))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        g, s, _ = q_xgcd(q_trim(self.coeffs), self.field._monic)
        if len(g) != 1:
            raise ComputationError("field polynomial is not irreducible")
        s = tuple(c / g[0] for c in s)
        _, rem = q_divmod(s, self.field._monic)
        rem = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return NFElement(self.field, tuple(rem[: self.field.degree]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self.field.rational(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- exact sign and conversions ------------------------------------------

    def sign(self) -> int:
        if self.is_rational():
            v = self.coeffs[0]
            return (v > 0) - (v < 0)
        # Nonzero reduced polynomial of degree < deg(p) cannot vanish at t.
        while True:
            lo, hi = enclosure.poly_interval(self.coeffs, self.field.root.lo, self.field.root.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.field.refine_root((self.field.root.hi - self.field.root.lo) / 4)

    def mult_matrix(self):
        """Matrix of multiplication by self on the power basis 1, t, ..., t^{d-1}."""
        d = self.field.degree
        cols = []
        t_power = self.field.rational(1)
        gen = self.field.generator() if d > 1 else None
        for j in range(d):
            img = self * t_power
            cols.append(img.coeffs)
            if j < d - 1:
                t_power = t_power * gen
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def charpoly(self) -> list:
        return charpoly(self.mult_matrix())

    def is_algebraic_integer(self) -> bool:
        """Characteristic polynomial of multiplication has integer coefficients."""
        return all(Fraction(c).denominator == 1 for c in self.charpoly())

    def minimal_polynomial(self) -> IntPoly:
        """Primitive minimal polynomial over Q via first dependency among powers."""
        d = self.field.degree
        powers = [self.field.rational(1)]
        for _ in range(d):
            powers.append(powers[-1] * self)
        for k in range(1, d + 1):
            rows = [[powers[m].coeffs[i] for m in range(k + 1)] for i in range(d)]
            ker = kernel_basis(rows)
            if ker:
                return from_fractions(ker[0])
        raise ComputationError("no minimal polynomial within field degree")

    def to_real_algebraic(self) -> RealAlgebraic:
        """The same number as a standalone RealAlgebraic."""
        if self.is_rational():
            return RealAlgebraic.from_rational(self.coeffs[0])
        mp = self.minimal_polynomial()
        from .realalg import real_roots

        roots = list(real_roots(mp))
        while True:
            lo, hi = enclosure.poly_interval(self.coeffs, self.field.root.lo, self.field.root.hi)
            hits = [r for r in roots if r.lo <= hi and lo <= r.hi]
            if len(hits) == 1:
                r = hits[0]
                return RealAlgebraic(r.minpoly, max(r.lo, lo), min(r.hi, hi), _checked=True)
            self.field.refine_root((self.field.root.hi - self.field.root.lo) / 4)
            roots = [r.refine((r.hi - r.lo) / 4 if r.hi > r.lo else Fraction(1)) for r in roots]

    def divides(self, other: "NFElement") -> bool:
        """True iff other/self is an algebraic integer; self nonzero."""
        if self.is_zero():
            raise ZeroDivisionError("divisibility by zero")
        return (self._check(other) / self).is_algebraic_integer()

    def interval(self):
        return enclosure.poly_interval(self.coeffs, self.field.root.lo, self.field.root.hi)

    def __repr__(self):
        lo, hi = self.interval()
        return f"NFElement({list(self.coeffs)} ~ {float((lo + hi) / 2):.6g})"

"""Dense integer polynomials, rational-coefficient helpers, Sturm chains and factorization.

Polynomials are stored constant-term first.  ``IntPoly`` is the exact public type
(minimal polynomials, characteristic polynomials); internal rational-coefficient
work (Sturm chains, Euclidean division) uses plain tuples of ``Fraction``.

Irreducible factorization over Q is delegated to sympy (any correct algorithm is
acceptable here); everything else is self-contained.
"""
from __future__ import annotations

import functools
from fractions import Fraction

import sympy

from ..errors import InvalidInput, ResourceLimit

# Factorization cost grows quickly with degree; instances of interest stay far below this.
DEGREE_CAP = 64


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """A polynomial with integer coefficients, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        import math

        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient (canonical form)."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate exactly; x may be int, Fraction or anything with ring ops."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c: Fraction) -> "IntPoly":
        """Return the primitive integer polynomial with roots shifted by c: p(x - c) scaled."""
        qc = [Fraction(v) for v in self.coeffs]
        # Horner-style composition p(x - c) over Q.
        acc = ()
        for v in reversed(qc):
            acc = q_add(q_mul_linear(acc, -c), (v,))
        return from_fractions(acc)

    def scale_roots(self, c: Fraction) -> "IntPoly":
        """Primitive integer polynomial whose roots are c * (roots of self); c != 0."""
        if c == 0:
            raise InvalidInput("cannot scale roots by zero")
        qc = [Fraction(v) / c**i for i, v in enumerate(self.coeffs)]
        return from_fractions(tuple(qc))

    def reversed_coeffs(self) -> "IntPoly":
        """Primitive polynomial with reciprocal roots (constant term must be nonzero)."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise InvalidInput("reciprocal requires nonzero constant term")
        return IntPoly(list(reversed(self.coeffs))).primitive()

    def even_part_in_square(self) -> "IntPoly":
        """For p, return the primitive q with q(x^2) = +-p(x)p(-x); roots of q are squares of roots of p."""
        pm = IntPoly([(-1) ** i * c for i, c in enumerate(self.coeffs)])
        prod = self * pm
        assert all(c == 0 for i, c in enumerate(prod.coeffs) if i % 2 == 1)
        return IntPoly(prod.coeffs[0::2]).primitive()

    def __repr__(self):
        if self.is_zero():
            return "IntPoly('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + mag + term)
        return f"IntPoly('{' '.join(parts)}')"


def x_poly() -> IntPoly:
    return IntPoly([0, 1])


def from_fractions(coeffs) -> IntPoly:
    """Clear denominators of a rational-coefficient polynomial; returns the primitive part."""
    import math

    coeffs = [Fraction(c) for c in coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return IntPoly([int(c * den) for c in coeffs]).primitive()


# -- rational-coefficient polynomial helpers (tuples of Fraction) ----------


def q_trim(c):
    end = len(c)
    while end > 0 and c[end - 1] == 0:
        end -= 1
    return tuple(c[:end])


def q_add(a, b):
    n = max(len(a), len(b))
    return q_trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))


def q_neg(a):
    return tuple(-c for c in a)


def q_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci:
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
    return q_trim(out)


def q_mul_linear(a, c):
    """Multiply polynomial a by (x + c)."""
    return q_add((0,) + tuple(a), q_mul(a, (c,)) if c else ())


def q_divmod(a, b):
    """Euclidean division over Q; b nonzero."""
    a = list(q_trim(a))
    b = q_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        f = Fraction(a[-1], 1) / b[-1]
        q[k] = f
        for i, cb in enumerate(b):
            a[k + i] -= f * cb
        a.pop()
    return q_trim(q), q_trim(a)


def q_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def q_gcd(a, b):
    """Monic gcd over Q."""
    a, b = q_trim(a), q_trim(b)
    while b:
        a, b = b, q_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def q_xgcd(a, b):
    """Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic or zero."""
    r0, r1 = q_trim(a), q_trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = q_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, q_add(s0, q_neg(q_mul(q, s1)))
        t0, t1 = t1, q_add(t0, q_neg(q_mul(q, t1)))
    if r0:
        lead = r0[-1]
        r0 = tuple(c / lead for c in r0)
        s0 = tuple(c / lead for c in s0)
        t0 = tuple(c / lead for c in t0)
    return r0, s0, t0


# -- Sturm chains ----------------------------------------------------------


def sturm_chain(p: IntPoly):
    """Sturm chain of p as rational-coefficient tuples."""
    chain = [tuple(Fraction(c) for c in p.coeffs)]
    d = tuple(Fraction(c) for c in p.derivative().coeffs)
    if d:
        chain.append(d)
        while True:
            r = q_divmod(chain[-2], chain[-1])[1]
            if not r:
                break
            chain.append(q_neg(r))
    return chain


def sign_variations(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = q_eval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: all real roots lie strictly inside (-B, B)."""
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree >= 1 else 0
    return Fraction(1) + Fraction(m, lead)


# -- factorization (sympy-backed) and cyclotomic polynomials ----------------

_X = sympy.Symbol("x")


def factor_rational(p: IntPoly):
    """Irreducible factorization over Q: list of (primitive IntPoly, multiplicity).

    Raises ResourceLimit above DEGREE_CAP.
    """
    if p.is_zero():
        raise InvalidInput("cannot factor the zero polynomial")
    if p.degree > DEGREE_CAP:
        raise ResourceLimit(f"polynomial degree {p.degree} exceeds factorization cap {DEGREE_CAP}")
    expr = sympy.Poly([int(c) for c in reversed(p.coeffs)], _X, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(sympy.Rational(c)) for c in reversed(fac.all_coeffs())]
        out.append((from_fractions(coeffs), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible(p: IntPoly) -> bool:
    facs = factor_rational(p)
    return len(facs) == 1 and facs[0][1] == 1 and p.degree >= 1


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by lower ones."""
    if n < 1:
        raise InvalidInput("conductor must be positive")
    poly = tuple(Fraction(c) for c in IntPoly([-1] + [0] * (n - 1) + [1]).coeffs)
    for d in range(1, n):
        if n % d == 0:
            q, r = q_divmod(poly, tuple(Fraction(c) for c in cyclotomic_polynomial(d).coeffs))
            assert not r
            poly = q
    return IntPoly([int(c) for c in poly])


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return cyclotomic_polynomial(n).degree

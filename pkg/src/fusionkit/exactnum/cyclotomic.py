"""Exact elements of cyclotomic fields Q(zeta_n) in the power basis.

An element is stored as an integer coefficient vector of length phi(n) over a
single positive denominator, reduced modulo the n-th cyclotomic polynomial and
normalized so gcd(content, den) = 1.  The conductor is the caller's choice and is
never minimized; binary operations lift both operands to the lcm conductor.

Complex conjugation is the Galois map zeta -> zeta^{-1}.  Signs of real elements
are decided by certified rational enclosures (see enclosure.py); equality is a
tuple comparison of canonical forms.
"""
from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

from ..errors import ComputationError, InvalidInput, ParseError
from . import enclosure
from .intpoly import IntPoly, cyclotomic_polynomial, euler_phi
from .linalg import charpoly, kernel_basis


@functools.lru_cache(maxsize=None)
def _tables(n: int):
    """Per-conductor reduction data: powers of zeta in the power basis."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n).coeffs
    # zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}); cyc is monic.
    top = tuple(-c for c in cyc[:phi])
    pows = [tuple(1 if i == m else 0 for i in range(phi)) for m in range(min(phi, n))]
    while len(pows) < n:
        prev = pows[-1]
        shifted = [0] + list(prev[:-1])
        carry = prev[-1]
        if carry:
            shifted = [s + carry * t for s, t in zip(shifted, top)]
        pows.append(tuple(shifted))
    return phi, tuple(pows)


@functools.lru_cache(maxsize=None)
def _galois_rows(n: int, k: int):
    """Rows mapping basis zeta^j -> zeta^{j*k mod n} in the power basis."""
    phi, pows = _tables(n)
    return tuple(pows[(j * k) % n] for j in range(phi))


def _normalize(n, num, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = [-v for v in num]
        den = -den
    g = den
    for v in num:
        g = math.gcd(g, abs(v))
        if g == 1:
            break
    if g > 1:
        num = [v // g for v in num]
        den //= g
    return tuple(num), den


class Cyclotomic:
    """An exact element of Q(zeta_n) with a fixed, caller-chosen conductor n."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1):
        if n < 1:
            raise InvalidInput("conductor must be positive")
        phi, _ = _tables(n)
        num = list(num)
        if len(num) != phi:
            raise InvalidInput(f"expected {phi} coefficients for conductor {n}, got {len(num)}")
        num, den = _normalize(n, [int(v) for v in num], int(den))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(value, n: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        phi = euler_phi(n)
        num = [value.numerator] + [0] * (phi - 1)
        return Cyclotomic(n, num, value.denominator)

    @staticmethod
    def from_fractions(n: int, coeffs) -> "Cyclotomic":
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Cyclotomic(n, [int(c * den) for c in coeffs], den)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity zeta_n^k."""
        phi, pows = _tables(n)
        return Cyclotomic(n, pows[k % n])

    @staticmethod
    def zero(n: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(0, n)

    @staticmethod
    def one(n: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(1, n)

    # -- structure -------------------------------------------------------------

    @property
    def coeffs(self):
        """Coordinates in the power basis 1, zeta, ..., zeta^{phi(n)-1} as Fractions."""
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.num)

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInput(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def lift(self, m: int) -> "Cyclotomic":
        """Re-express in Q(zeta_m) for a multiple m of the conductor."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise InvalidInput(f"cannot lift conductor {self.n} into {m}")
        phi_m, pows_m = _tables(m)
        step = m // self.n
        out = [0] * phi_m
        for j, v in enumerate(self.num):
            if v:
                row = pows_m[(j * step) % m]
                for i in range(phi_m):
                    out[i] += v * row[i]
        return Cyclotomic(m, out, self.den)

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(other)
        n = self.n * other.n // math.gcd(self.n, other.n)
        return self.lift(n), other.lift(n)

    # -- arithmetic -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        d = self.descend()
        return hash((d.n, d.num, d.den))

    def descend(self) -> "Cyclotomic":
        """Re-express at the smallest divisor conductor containing the element.

        Does not change any stored value (conductors are never auto-minimized);
        used for conductor-independent hashing and display.
        """
        if self.is_rational():
            return Cyclotomic.from_rational(Fraction(self.num[0], self.den), 1)
        for d in sorted(k for k in range(1, self.n) if self.n % k == 0):
            fixed = all(self.galois(k) == self
                        for k in range(1, self.n) if math.gcd(k, self.n) == 1 and k % d == 1)
            if not fixed:
                continue
            phi_d = euler_phi(d)
            basis = [Cyclotomic.zeta(d, j).lift(self.n) for j in range(phi_d)]
            phi_n, _ = _tables(self.n)
            rows = [[basis[j].coeffs[i] for j in range(phi_d)] for i in range(phi_n)]
            from .linalg import solve

            sol = solve(rows, list(self.coeffs))
            if sol is not None:
                return Cyclotomic.from_fractions(d, sol)
        return self

    def __add__(self, other):
        a, b = self._common(other)
        den = a.den * b.den // math.gcd(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return Cyclotomic(a.n, [fa * x + fb * y for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-v for v in self.num], self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(self.n, [v * other.numerator for v in self.num],
                              self.den * other.denominator)
        a, b = self._common(other)
        phi, pows = _tables(a.n)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = [0] * phi
        for e, c in enumerate(conv):
            if c:
                row = pows[e % a.n]
                for i in range(phi):
                    out[i] += c * row[i]
        return Cyclotomic(a.n, out, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.from_rational(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of the remaining Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.as_fraction(), self.n)
        prod = Cyclotomic.one(self.n)
        for k in range(2, self.n + 1):
            if math.gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        norm = prod * self
        if not norm.is_rational():
            raise ComputationError("norm of a cyclotomic is not rational")
        nf = norm.as_fraction()
        if nf == 0:
            raise ZeroDivisionError("division by zero")
        return prod * (1 / nf)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.galois(self.n - 1 if self.n > 1 else 1)

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta -> zeta^k; requires gcd(k, n) = 1."""
        if math.gcd(k, self.n) != 1:
            raise InvalidInput(f"galois exponent {k} not coprime to conductor {self.n}")
        phi, _ = _tables(self.n)
        rows = _galois_rows(self.n, k % self.n)
        out = [0] * phi
        for j, v in enumerate(self.num):
            if v:
                row = rows[j]
                for i in range(phi):
                    out[i] += v * row[i]
        return Cyclotomic(self.n, out, self.den)

    def is_real(self) -> bool:
        return self.conj() == self

    def sign(self) -> int:
        """Exact sign under the embedding zeta_n = exp(2*pi*i/n); element must be real."""
        if not self.is_real():
            raise InvalidInput("sign of a non-real cyclotomic")
        if self.is_zero():
            return 0
        return enclosure.real_combination_sign(
            [(j, Fraction(v, self.den)) for j, v in enumerate(self.num)], self.n)

    def interval(self, level: int = 2):
        """Rational enclosure of a real element."""
        if not self.is_real():
            raise InvalidInput("interval of a non-real cyclotomic")
        return enclosure.real_combination_interval(
            [(j, Fraction(v, self.den)) for j, v in enumerate(self.num)], self.n, level)

    def __repr__(self):
        return f"Cyclotomic({encode(self)!r})"

    # -- multiplication matrix (for the characteristic-polynomial oracle) ------

    def mult_matrix(self):
        """Matrix of multiplication by self on the power basis, over Q (rows = images)."""
        phi, _ = _tables(self.n)
        cols = []
        for j in range(phi):
            img = self * Cyclotomic.zeta(self.n, j)
            cols.append(img.coeffs)
        # cols[j][i] = coefficient of zeta^i in self * zeta^j; matrix acts on coordinates.
        return [[cols[j][i] for j in range(phi)] for i in range(phi)]


# -- ring-of-integers and root-of-unity classification -------------------------


def is_algebraic_integer(x: Cyclotomic) -> bool:
    """True iff x lies in the ring of integers of Q(zeta_n).

    The power basis generates the full ring of integers of a cyclotomic field, so
    this is exactly den == 1 of the canonical form; the characteristic-polynomial
    route is kept as an oracle (charpoly_integrality_oracle).
    """
    return x.den == 1


def charpoly_integrality_oracle(x: Cyclotomic) -> bool:
    """Spec route: multiplication-by-x characteristic polynomial has integer coefficients."""
    cp = charpoly(x.mult_matrix())
    return all(Fraction(c).denominator == 1 for c in cp)


def minpoly_oracle(x: Cyclotomic) -> IntPoly:
    """Monic minimal polynomial over Q via the first linear dependency among powers.

    Returned as the primitive integer polynomial; x is an algebraic integer iff the
    monic rational minimal polynomial is integral, i.e. iff the primitive form is monic.
    """
    phi, _ = _tables(x.n)
    powers = [Cyclotomic.one(x.n)]
    for _ in range(phi):
        powers.append(powers[-1] * x)
    for d in range(1, phi + 1):
        rows = [[powers[k].coeffs[i] for k in range(d + 1)] for i in range(phi)]
        ker = kernel_basis(rows)
        if ker:
            vec = ker[0]
            if vec[d] == 0:
                continue
            from .intpoly import from_fractions

            return from_fractions(vec)
    raise ComputationError("no minimal polynomial found within field degree")


def divides_in_ring(a: Cyclotomic, b: Cyclotomic) -> bool:
    """True iff b/a is an algebraic integer; a must be nonzero."""
    if not isinstance(a, Cyclotomic) or not isinstance(b, Cyclotomic):
        raise InvalidInput("divides_in_ring expects cyclotomic operands; "
                           "for Perron-field elements use NumberField.divides")
    if a.is_zero():
        raise ZeroDivisionError("divisibility by zero")
    return is_algebraic_integer(b / a)


def galois_conjugates(x: Cyclotomic):
    """Images of x under zeta -> zeta^k for all k coprime to n, in increasing k."""
    return [x.galois(k) for k in range(1, x.n + 1) if math.gcd(k, x.n) == 1]


class Kronecker:
    """Classification outcome of kronecker_classify."""

    __slots__ = ("kind", "order")

    def __init__(self, kind: str, order: int | None = None):
        self.kind = kind
        self.order = order

    def __eq__(self, other):
        return isinstance(other, Kronecker) and (self.kind, self.order) == (other.kind, other.order)

    def __repr__(self):
        return f"Kronecker({self.kind}{'' if self.order is None else f', order={self.order}'})"


ZERO = "Zero"
ROOT_OF_UNITY = "RootOfUnity"
OTHER = "Other"


def kronecker_classify(x: Cyclotomic) -> Kronecker:
    """Decide whether x is 0, a root of unity (with its exact order), or neither.

    An algebraic integer all of whose conjugates have modulus 1 is a root of unity;
    in an abelian extension x*conj(x) = 1 forces the same for every conjugate, so
    the modulus test is the single exact identity x * conj(x) = 1.
    """
    if x.is_zero():
        return Kronecker(ZERO)
    if not is_algebraic_integer(x):
        return Kronecker(OTHER)
    if x * x.conj() != Cyclotomic.one(x.n):
        return Kronecker(OTHER)
    # Roots of unity in Q(zeta_n) form the cyclic group of order lcm(2, n).
    limit = x.n if x.n % 2 == 0 else 2 * x.n
    order = None
    for m in sorted(d for d in range(1, limit + 1) if limit % d == 0):
        if x**m == Cyclotomic.one(x.n):
            order = m
            break
    if order is None:
        raise ComputationError("unit-modulus algebraic integer with no root-of-unity order")
    return Kronecker(ROOT_OF_UNITY, order)


def kronecker_oracle(x: Cyclotomic) -> Kronecker:
    """Brute-force classification: zero test, then power search up to 2*n^2."""
    if x.is_zero():
        return Kronecker(ZERO)
    power = x
    one = Cyclotomic.one(x.n)
    for m in range(1, 2 * x.n * x.n + 1):
        if power == one:
            return Kronecker(ROOT_OF_UNITY, m)
        power = power * x
    return Kronecker(OTHER)


# -- textual encoding -----------------------------------------------------------

_CYC_RE = re.compile(r"^cyc\((\d+)\)\[(.*)\]$")


def encode(x: Cyclotomic) -> str:
    """Encode as cyc(n)[c0, c1, ...] with rational coefficients p/q or p."""
    parts = []
    for c in x.coeffs:
        parts.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return f"cyc({x.n})[{', '.join(parts)}]"


def parse(text: str) -> Cyclotomic:
    """Parse the cyc(n)[...] encoding; bit-exact round-trip with encode."""
    m = _CYC_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a cyclotomic encoding: {text!r}")
    n = int(m.group(1))
    if n < 1:
        raise ParseError(f"conductor must be positive in {text!r}")
    body = m.group(2).strip()
    coeffs = []
    if body:
        for tok in body.split(","):
            tok = tok.strip()
            try:
                coeffs.append(Fraction(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational {tok!r} in {text!r}") from exc
    if len(coeffs) != euler_phi(n):
        raise ParseError(f"conductor {n} needs {euler_phi(n)} coefficients, got {len(coeffs)}")
    return Cyclotomic.from_fractions(n, coeffs)

"""Certified rational enclosures for sign determination and decimal rendering.

Equality decisions in this library are always symbolic.  What cannot be decided
symbolically is the *sign* of a provably nonzero real number under the standard
embedding zeta_n = exp(2*pi*i/n); for that we use rational interval arithmetic
(Machin pi enclosure, Taylor cosine with explicit remainder bounds) refined until
the enclosure excludes zero.  There is no epsilon: refinement terminates exactly
because the input is nonzero.
"""
from __future__ import annotations

import functools
from fractions import Fraction


def _atan_interval(inv_x: int, terms: int):
    """Enclosure of atan(1/inv_x) by alternating partial sums."""
    x = Fraction(1, inv_x)
    s = Fraction(0)
    power = x
    x2 = x * x
    for i in range(terms):
        term = power / (2 * i + 1)
        s = s + term if i % 2 == 0 else s - term
        power *= x2
    # Alternating series with decreasing terms: truncation error bounded by next term.
    nxt = power / (2 * terms + 1)
    return s - nxt, s + nxt


@functools.lru_cache(maxsize=None)
def pi_interval(terms: int = 12):
    """Rational enclosure of pi via Machin: pi = 16*atan(1/5) - 4*atan(1/239)."""
    a_lo, a_hi = _atan_interval(5, terms)
    b_lo, b_hi = _atan_interval(239, max(terms // 2, 3))
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


def _cos_point(t: Fraction, terms: int):
    """Enclosure of cos(t) at a rational point, |t| <= 7."""
    t2 = t * t
    s = Fraction(1)
    power = Fraction(1)
    fact = 1
    for i in range(1, terms):
        power *= t2
        fact *= (2 * i - 1) * (2 * i)
        term = power / fact
        s = s - term if i % 2 == 1 else s + term
    power *= t2
    fact *= (2 * terms - 1) * (2 * terms)
    rem = power / fact
    # Remainder bound valid once terms grow: enforced by the caller keeping terms >= 8.
    return s - rem, s + rem


def cos_interval(lo: Fraction, hi: Fraction, terms: int = 10):
    """Enclosure of cos over a rational interval, using |cos'| <= 1."""
    mid = (lo + hi) / 2
    half = (hi - lo) / 2
    c_lo, c_hi = _cos_point(mid, terms)
    lo_out = c_lo - half
    hi_out = c_hi + half
    if lo_out < -1:
        lo_out = Fraction(-1)
    if hi_out > 1:
        hi_out = Fraction(1)
    return lo_out, hi_out


@functools.lru_cache(maxsize=8192)
def cos_two_pi_over(j: int, n: int, level: int):
    """Enclosure of cos(2*pi*j/n) at a given refinement level."""
    terms = 8 + 4 * level
    pi_lo, pi_hi = pi_interval(8 + 4 * level)
    j = j % n
    # Reduce to [0, pi] using cos(2*pi - x) = cos(x) so the angle stays <= ~3.2.
    if 2 * j > n:
        j = n - j
    lo = 2 * pi_lo * Fraction(j, n)
    hi = 2 * pi_hi * Fraction(j, n)
    return cos_interval(lo, hi, terms)


def real_combination_sign(pairs, n: int) -> int:
    """Exact sign of sum(c_j * cos(2*pi*j/n)) given it is provably nonzero.

    pairs: iterable of (j, c_j) with rational c_j, not all zero as a real number.
    """
    pairs = [(j, Fraction(c)) for j, c in pairs if c != 0]
    if not pairs:
        return 0
    for level in range(0, 64):
        lo = hi = Fraction(0)
        for j, c in pairs:
            c_lo, c_hi = cos_two_pi_over(j, n, level)
            if c >= 0:
                lo += c * c_lo
                hi += c * c_hi
            else:
                lo += c * c_hi
                hi += c * c_lo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    raise ArithmeticError("sign refinement did not converge; value may be zero")


def real_combination_interval(pairs, n: int, level: int):
    """Enclosure of sum(c_j * cos(2*pi*j/n)) at a refinement level."""
    lo = hi = Fraction(0)
    for j, c in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        c_lo, c_hi = cos_two_pi_over(j, n, level)
        if c >= 0:
            lo += c * c_lo
            hi += c * c_hi
        else:
            lo += c * c_hi
            hi += c * c_lo
    return lo, hi


def poly_interval(coeffs, lo: Fraction, hi: Fraction):
    """Enclosure of a Fraction-coefficient polynomial over [lo, hi] by interval Horner."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(list(coeffs)):
        cand = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(cand) + c, max(cand) + c
    return acc_lo, acc_hi


def decimal_string(lo: Fraction, hi: Fraction, digits: int = 6) -> str:
    """Decimal rendering of the midpoint, annotated as exact only if lo == hi."""
    mid = (lo + hi) / 2
    scaled = mid * 10**digits
    rounded = int(scaled) if scaled >= 0 else -int(-scaled)
    whole, frac = divmod(abs(rounded), 10**digits)
    sign = "-" if rounded < 0 else ""
    return f"{sign}{whole}.{str(frac).zfill(digits)}"

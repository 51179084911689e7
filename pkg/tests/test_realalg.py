from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionkit.errors import InvalidInput
from fusionkit.exactnum.intpoly import IntPoly
from fusionkit.exactnum.realalg import RealAlgebraic, real_roots


def test_sqrt2_roots_symmetric():
    roots = real_roots(IntPoly([-2, 0, 1]))
    assert len(roots) == 2
    assert roots[0] == -roots[1]
    assert roots[0].minpoly == IntPoly([-2, 0, 1])
    assert roots[1].minpoly == IntPoly([-2, 0, 1])
    assert roots[0] < roots[1]


def test_identity_case():
    roots = real_roots(IntPoly([-1, 1]))
    assert len(roots) == 1
    assert roots[0] == 1
    assert roots[0].as_fraction() == 1


def test_golden_isolation_matches_hand_intervals():
    # Hand Sturm counts isolate the roots of x^2 - x - 1 in (-1, 0) and (1, 2).
    roots = real_roots(IntPoly([-1, -1, 1]))
    assert len(roots) == 2
    neg, pos = roots
    assert Fraction(-1) < neg < Fraction(0)
    assert Fraction(1) < pos < Fraction(2)


def test_endpoint_signs_invariant():
    for poly in (IntPoly([-2, 0, 1]), IntPoly([-1, -1, 1]), IntPoly([1, -3, 0, 1])):
        for r in real_roots(poly):
            if r.is_rational():
                assert r.minpoly(r.lo) == 0
            else:
                assert r.minpoly(r.lo) * r.minpoly(r.hi) < 0


def test_no_roots():
    assert real_roots(IntPoly([1, 0, 1])) == []


def test_zero_polynomial_rejected():
    with pytest.raises(InvalidInput):
        real_roots(IntPoly())


def test_multiplicities_discarded():
    sq = IntPoly([-2, 0, 1]) * IntPoly([-2, 0, 1])
    assert len(real_roots(sq)) == 2


def test_comparisons_and_sign():
    s2 = RealAlgebraic.sqrt_of(2)
    s3 = RealAlgebraic.sqrt_of(3)
    assert s2 < s3
    assert s2 > 1
    assert s2.sign() == 1
    assert (-s2).sign() == -1
    assert RealAlgebraic.from_rational(0).sign() == 0
    assert s2 != s3
    assert s2 == RealAlgebraic.sqrt_of(2)


def test_arithmetic_mixed():
    s2 = RealAlgebraic.sqrt_of(2)
    assert s2 * s2 == 2
    assert (s2 + s2) == 2 * s2
    assert (2 * s2).square() == 8
    assert (s2 + 1) * (s2 - 1) == 1
    golden = real_roots(IntPoly([-1, -1, 1]))[1]
    assert golden.square() == golden + 1
    assert 1 / golden == golden - 1
    assert golden.is_algebraic_integer()
    assert not (golden / 2).is_algebraic_integer()


def test_sqrt_of_perfect_square():
    assert RealAlgebraic.sqrt_of(Fraction(9, 4)) == Fraction(3, 2)
    assert RealAlgebraic.sqrt_of(8) * RealAlgebraic.sqrt_of(2) == 4


def test_division():
    s2 = RealAlgebraic.sqrt_of(2)
    assert RealAlgebraic.from_rational(2) / s2 == s2
    with pytest.raises(ZeroDivisionError):
        s2 / RealAlgebraic.from_rational(0)


@st.composite
def small_fractions(draw):
    num = draw(st.integers(min_value=-12, max_value=12))
    den = draw(st.integers(min_value=1, max_value=6))
    return Fraction(num, den)


@given(small_fractions(), small_fractions())
@settings(max_examples=40, deadline=None)
def test_rational_embedding_respects_field_ops(a, b):
    ra, rb = RealAlgebraic.from_rational(a), RealAlgebraic.from_rational(b)
    assert (ra + rb).as_fraction() == a + b
    assert (ra * rb).as_fraction() == a * b
    if b != 0:
        assert (ra / rb).as_fraction() == a / b


@given(small_fractions())
@settings(max_examples=25, deadline=None)
def test_sqrt_consistency(a):
    if a < 0:
        return
    r = RealAlgebraic.sqrt_of(a)
    assert r.square() == a
    assert r.sign() >= 0

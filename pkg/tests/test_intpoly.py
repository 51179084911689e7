from fractions import Fraction

import pytest

from fusionkit.errors import InvalidInput, ResourceLimit
from fusionkit.exactnum.intpoly import (IntPoly, cyclotomic_polynomial, euler_phi,
                                        factor_rational, from_fractions, is_irreducible,
                                        q_divmod, q_gcd, q_xgcd, sign_variations,
                                        sturm_chain)


def test_construction_trims_and_degree():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPoly().is_zero()
    assert IntPoly([0, 0]).is_zero()


def test_arithmetic():
    p = IntPoly([-1, 0, 1])  # x^2 - 1
    q = IntPoly([1, 1])      # x + 1
    assert p + q == IntPoly([0, 1, 1])
    assert p - p == IntPoly()
    assert q * q == IntPoly([1, 2, 1])
    assert (p * q)(Fraction(3)) == p(3) * q(3)
    assert p.derivative() == IntPoly([0, 2])


def test_primitive_and_content():
    p = IntPoly([-4, 0, 2])
    assert p.content() == 2
    assert p.primitive() == IntPoly([-2, 0, 1])
    assert IntPoly([2, 0, -4]).primitive() == IntPoly([-1, 0, 2])  # leading made positive


def test_shift_scale_reverse():
    p = IntPoly([-2, 0, 1])  # roots +-sqrt2
    shifted = p.shift(Fraction(1))  # roots +-sqrt2 + 1
    assert shifted(Fraction(1)) == p(0)
    scaled = p.scale_roots(Fraction(2))  # roots +-2*sqrt2 -> x^2 - 8
    assert scaled == IntPoly([-8, 0, 1])
    assert IntPoly([-1, -1, 1]).reversed_coeffs() == IntPoly([-1, 1, 1]).primitive()


def test_even_part_in_square():
    p = IntPoly([-1, -1, 1])  # golden: squares satisfy x^2 - 3x + 1
    assert p.even_part_in_square() == IntPoly([1, -3, 1])


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == IntPoly([-1, 1])
    assert cyclotomic_polynomial(2) == IntPoly([1, 1])
    assert cyclotomic_polynomial(3) == IntPoly([1, 1, 1])
    assert cyclotomic_polynomial(4) == IntPoly([1, 0, 1])
    assert cyclotomic_polynomial(8) == IntPoly([1, 0, 0, 0, 1])
    assert cyclotomic_polynomial(12) == IntPoly([1, 0, -1, 0, 1])
    assert euler_phi(12) == 4
    assert euler_phi(16) == 8


def test_factor_rational():
    p = IntPoly([-1, 0, 0, 0, 1])  # x^4 - 1
    facs = factor_rational(p)
    assert [(f.coeffs, m) for f, m in facs] == [
        ((-1, 1), 1), ((1, 1), 1), ((1, 0, 1), 1)]
    assert is_irreducible(IntPoly([-1, -1, 1]))
    assert not is_irreducible(IntPoly([-1, 0, 1]))
    with pytest.raises(InvalidInput):
        factor_rational(IntPoly())


def test_factor_degree_cap():
    import fusionkit.exactnum.intpoly as ip

    big = IntPoly([1] + [0] * (ip.DEGREE_CAP) + [1])
    with pytest.raises(ResourceLimit):
        factor_rational(big)


def test_sturm_counts_hand_derived():
    # Sign counts for x^2 - x - 1 computed by hand from the chain
    # [x^2 - x - 1, 2x - 1, 5/4]: V(-1)=2, V(0)=1, V(1)=1, V(2)=0.
    chain = sturm_chain(IntPoly([-1, -1, 1]))
    assert sign_variations(chain, Fraction(-1)) == 2
    assert sign_variations(chain, Fraction(0)) == 1
    assert sign_variations(chain, Fraction(1)) == 1
    assert sign_variations(chain, Fraction(2)) == 0


def test_q_helpers():
    a = (Fraction(-1), Fraction(0), Fraction(1))
    b = (Fraction(1), Fraction(1))
    q, r = q_divmod(a, b)
    assert q == (Fraction(-1), Fraction(1)) and r == ()
    g = q_gcd(a, b)
    assert g == (Fraction(1), Fraction(1))
    g, s, t = q_xgcd((Fraction(1), Fraction(1)), (Fraction(1), Fraction(0), Fraction(1)))
    # (x+1) and (x^2+1) are coprime: s(x+1) + t(x^2+1) = 1
    from fusionkit.exactnum.intpoly import q_add, q_mul

    assert q_add(q_mul(s, (Fraction(1), Fraction(1))),
                 q_mul(t, (Fraction(1), Fraction(0), Fraction(1)))) == (Fraction(1),)


def test_from_fractions():
    assert from_fractions([Fraction(1, 2), Fraction(1, 3)]) == IntPoly([3, 2])

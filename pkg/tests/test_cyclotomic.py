import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionkit.errors import InvalidInput
from fusionkit.exactnum.cyclotomic import (Cyclotomic, Kronecker, OTHER,
                                           ROOT_OF_UNITY, ZERO,
                                           charpoly_integrality_oracle,
                                           divides_in_ring, encode,
                                           galois_conjugates,
                                           is_algebraic_integer,
                                           kronecker_classify, kronecker_oracle,
                                           minpoly_oracle, parse)
from fusionkit.exactnum.intpoly import IntPoly, euler_phi


def zeta(n, k=1):
    return Cyclotomic.zeta(n, k)


def test_basic_identities():
    z5 = zeta(5)
    assert z5**5 == 1
    assert sum((z5**k for k in range(1, 5)), Cyclotomic.one(5)) == 0
    assert z5 * z5.inverse() == 1
    assert (z5 + 1) - 1 == z5


def test_conjugation_is_involution_and_galois():
    z8 = zeta(8)
    assert z8.conj() == z8**7
    assert z8.conj().conj() == z8
    x = z8 + 2 * z8**3 - Fraction(1, 2)
    assert x.conj().conj() == x
    assert x.galois(3).galois(3) == x.galois(9 % 8)


def test_conductor_lift_and_equality():
    z3 = zeta(3)
    z6 = zeta(6)
    assert z6**2 == z3  # lifted comparison across conductors 6 and 3
    assert z3.lift(6) * z3.lift(6) == z3 * z3
    assert hash(z3.lift(6)) == hash(z3)
    with pytest.raises(InvalidInput):
        z3.lift(4)


def test_mixed_conductor_arithmetic():
    x = zeta(3) + zeta(4)  # lands in conductor 12
    assert x.n == 12
    assert x - zeta(4) == zeta(3)


def test_algebraic_integer_examples():
    # 1/2 is not an algebraic integer (conductor 1).
    half = Cyclotomic.from_rational(Fraction(1, 2))
    assert not is_algebraic_integer(half)
    assert not charpoly_integrality_oracle(half)
    # zeta_8 is a root of unity, hence integral.
    assert is_algebraic_integer(zeta(8))
    assert charpoly_integrality_oracle(zeta(8))
    # (1+sqrt5)/2 encoded in conductor 5 as 1 + z5 + z5^4: char poly a power of x^2-x-1.
    golden = Cyclotomic.one(5) + zeta(5) + zeta(5, 4)
    assert is_algebraic_integer(golden)
    assert charpoly_integrality_oracle(golden)
    assert minpoly_oracle(golden) == IntPoly([-1, -1, 1])


def test_divides_in_ring_examples():
    two = Cyclotomic.from_rational(2)
    six = Cyclotomic.from_rational(6)
    one = Cyclotomic.one()
    assert divides_in_ring(two, six)
    assert not divides_in_ring(two, one)
    # sqrt2 | 2: quotient sqrt2 is integral (conductor 8: sqrt2 = z8 + z8^-1).
    sqrt2 = zeta(8) + zeta(8, 7)
    assert divides_in_ring(sqrt2, Cyclotomic.from_rational(2, 8))
    with pytest.raises(ZeroDivisionError):
        divides_in_ring(Cyclotomic.zero(), one)


def test_galois_conjugates_examples():
    three = Cyclotomic.from_rational(3, 5)
    assert galois_conjugates(three) == [three] * euler_phi(5)
    z5 = zeta(5)
    assert galois_conjugates(z5) == [z5, z5**2, z5**3, z5**4]
    golden = Cyclotomic.one(5) + z5 + z5**4
    conjs = galois_conjugates(golden)
    assert len(conjs) == 4
    assert conjs.count(golden) == 2
    other = Cyclotomic.one(5) + z5**2 + z5**3  # (1 - sqrt5)/2
    assert conjs.count(other) == 2
    assert golden + other == 1  # trace of the pair
    assert golden * other == -1  # norm of x^2 - x - 1


def test_kronecker_examples():
    assert kronecker_classify(Cyclotomic.zero(7)) == Kronecker(ZERO)
    assert kronecker_classify(-zeta(3)) == Kronecker(ROOT_OF_UNITY, 6)
    golden = Cyclotomic.one(5) + zeta(5) + zeta(5, 4)
    assert kronecker_classify(golden) == Kronecker(OTHER)
    assert kronecker_classify(Cyclotomic.one()) == Kronecker(ROOT_OF_UNITY, 1)
    assert kronecker_classify(Cyclotomic.from_rational(-1)) == Kronecker(ROOT_OF_UNITY, 2)
    assert kronecker_classify(zeta(12, 5)) == Kronecker(ROOT_OF_UNITY, 12)


def test_kronecker_implies_exact_power_identities():
    x = -zeta(3)
    k = kronecker_classify(x)
    assert k.kind == ROOT_OF_UNITY
    assert x**k.order == 1
    for j in range(1, k.order):
        assert x**j != 1


def test_encode_parse_round_trip():
    values = [
        Cyclotomic.from_rational(Fraction(-7, 3)),
        zeta(8) + Fraction(1, 2) * zeta(8, 3),
        Cyclotomic.zero(12),
        Cyclotomic.from_fractions(5, [1, Fraction(2, 7), 0, -3]),
    ]
    for v in values:
        assert parse(encode(v)) == v
        assert encode(parse(encode(v))) == encode(v)


def test_parse_rejects_malformed():
    from fusionkit.errors import ParseError

    for bad in ["cyc(5)[1, 2]", "cyc(0)[]", "zeta(5)[0,0,0,0]", "cyc(4)[1, x]"]:
        with pytest.raises(ParseError):
            parse(bad)


def test_real_sign():
    sqrt2 = zeta(8) + zeta(8, 7)
    assert sqrt2.is_real()
    assert sqrt2.sign() == 1
    assert (-sqrt2).sign() == -1
    assert (zeta(5, 2) + zeta(5, 3)).sign() == -1  # 2cos(4pi/5) < 0
    assert Cyclotomic.zero(5).sign() == 0
    with pytest.raises(InvalidInput):
        zeta(5).sign()


def random_cyclotomic(rng, n):
    phi = euler_phi(n)
    num = [rng.randint(-3, 3) for _ in range(phi)]
    den = rng.choice([1, 1, 1, 2, 3])
    return Cyclotomic(n, num, den)


def test_exactness_properties_randomized():
    rng = random.Random(7)
    conductors = [1, 2, 3, 4, 5, 6, 8, 12]
    for _ in range(60):
        n = rng.choice(conductors)
        a = random_cyclotomic(rng, n)
        b = random_cyclotomic(rng, rng.choice(conductors))
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a * b) / b == a
        assert a.conj().conj() == a


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=24))
@settings(max_examples=60, deadline=None)
def test_roots_of_unity_classified(n, k):
    x = zeta(n, k)
    got = kronecker_classify(x)
    assert got.kind == ROOT_OF_UNITY
    assert got == kronecker_oracle(x)
    import math

    d = math.gcd(k, n)
    assert got.order == n // d

import cmath
import random
from fractions import Fraction

import pytest

from fmrep.cyclonum import (
    Cyclotomic,
    euler_phi,
    cyclotomic_polynomial,
    from_coordinates,
    from_rational,
    rational_coordinates,
    zeta,
)


def random_element(rng, n, terms=3, span=4):
    x = from_rational(0)
    for _ in range(terms):
        x = x + rng.randrange(-span, span + 1) * zeta(n, rng.randrange(n))
    return x


def test_zeta_basics():
    assert zeta(1, 0) == 1
    assert zeta(4, 1) * zeta(4, 1) == -1
    assert zeta(3, 1) + zeta(3, 2) == -1
    assert zeta(6, 1) * zeta(6, 5) == 1
    assert zeta(8, 1).conjugate() == zeta(8, 7)
    with pytest.raises(ValueError):
        zeta(0)


def test_phi_and_cyclotomic_polynomials():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 8, 9, 12)] == [1, 1, 2, 2, 4, 6, 4]
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)


def test_minimal_conductor():
    assert zeta(6, 1).n == 3  # Q(zeta_6) = Q(zeta_3)
    assert (zeta(8, 1) + zeta(8, 7)).n == 8  # sqrt(2) needs conductor 8
    assert (zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)).n == 1
    assert (zeta(12, 3)).n == 4  # = i


def test_canonical_form_idempotent():
    rng = random.Random(2)
    for _ in range(60):
        x = random_element(rng, rng.randrange(1, 25))
        again = Cyclotomic(x.n, list(x.coeffs))
        assert again.n == x.n and again.coeffs == x.coeffs


def test_gauss_period_float_sanity():
    # the period zeta_9 + zeta_9^4 + zeta_9^7 collapses exactly
    x = zeta(9, 1) + zeta(9, 4) + zeta(9, 7)
    assert x == 0
    y = zeta(9, 1) + zeta(9, 8)
    target = 2 * cmath.cos(2 * cmath.pi / 9)
    assert abs(y.to_complex() - target) < 1e-9


def test_field_axioms_random():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randrange(1, 25)
        a, b = random_element(rng, n), random_element(rng, n, terms=2)
        c = random_element(rng, rng.randrange(1, 25), terms=2)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a - a == 0


def test_field_axioms_exhaustive_small():
    for n in (1, 2, 3, 4, 5, 6, 7, 8):
        units = [zeta(n, k) for k in range(n)]
        for a in units:
            for b in units:
                assert a * b == b * a
                for c in (units[0], units[-1]):
                    assert (a + b) * c == a * c + b * c
                    assert (a * b) * c == a * (b * c)


def test_conjugation_is_involution_and_multiplicative():
    rng = random.Random(9)
    for _ in range(50):
        a = random_element(rng, rng.randrange(1, 25))
        b = random_element(rng, rng.randrange(1, 25), terms=2)
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_norm_trace_nonnegative():
    rng = random.Random(13)
    for _ in range(40):
        a = random_element(rng, rng.randrange(1, 20))
        t = (a * a.conjugate()).trace()
        assert t >= 0
        if not a.is_zero():
            assert t > 0


def test_rational_coordinates_examples():
    assert rational_coordinates(from_rational(5), 3) == [Fraction(5), Fraction(0)]
    a = zeta(3, 1)
    coords = rational_coordinates(a, 3)
    assert from_coordinates(coords, 3) == a


def test_rational_coordinates_roundtrip_random():
    rng = random.Random(21)
    for _ in range(80):
        n = rng.randrange(1, 25)
        a = random_element(rng, n)
        m = n * rng.randrange(1, 25 // n + 1)
        coords = rational_coordinates(a, m)
        assert len(coords) == euler_phi(m)
        assert from_coordinates(coords, m) == a


def test_rational_coordinates_conductor_error():
    with pytest.raises(ValueError):
        rational_coordinates(zeta(8, 1), 12)  # 8 does not divide 12


def test_algebraic_integer_coordinates_are_integers():
    # sums of roots of unity stay inside Z[zeta_n]
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(1, 20)
        a = from_rational(0)
        for _ in range(4):
            a = a + zeta(n, rng.randrange(n))
        coords = rational_coordinates(a, n)
        assert all(c.denominator == 1 for c in coords)


def test_serialization_shape():
    assert str(from_rational(Fraction(-1, 2))) == "-1/2"
    assert str(zeta(4, 1)) == "E(4)^1"
    assert str(2 * zeta(8, 1) - Fraction(1, 2) * zeta(8, 3)) == "2*E(8)^1 - 1/2*E(8)^3"
    assert str(from_rational(0)) == "0"

import random

import pytest

from borderedsuture.coeff import GF2m, gf2m_arith
from borderedsuture.coeff.gf2m import irreducible_polynomial, is_irreducible


@pytest.mark.short
def test_prime_field():
    """In F2, 1 + 1 = 0."""
    f = gf2m_arith(1)
    assert f.add(1, 1) == 0
    assert f.mul(1, 1) == 1


@pytest.mark.short
@pytest.mark.parametrize("m", [2, 5, 8, 13, 32, 64])
def test_inverse(m):
    """a * a^-1 = 1 for random nonzero a."""
    f = GF2m(m)
    rng = random.Random(m)
    for _ in range(20):
        a = rng.randrange(1, f.order)
        assert f.mul(a, f.inverse(a)) == 1


@pytest.mark.short
def test_inverse_of_zero():
    with pytest.raises(ValueError):
        GF2m(8).inverse(0)


@pytest.mark.short
@pytest.mark.parametrize("m", range(1, 9))
def test_frobenius_brute_force(m):
    """a^(2^m) = a for every element of GF(2^m)."""
    f = GF2m(m)
    for a in f.elements():
        assert f.pow(a, f.order) == a


@pytest.mark.short
@pytest.mark.parametrize("m", [1, 3, 9, 17, 32, 48, 64])
def test_defining_polynomial_is_irreducible(m):
    f = irreducible_polynomial(m)
    assert f.bit_length() - 1 == m
    assert is_irreducible(f)


@pytest.mark.short
def test_reducible_polynomials_detected():
    # x^2 + 1 = (x + 1)^2 and x^4 + x^2 + 1 = (x^2 + x + 1)^2
    assert not is_irreducible(0b101)
    assert not is_irreducible(0b10101)


@pytest.mark.short
def test_degree_out_of_range():
    with pytest.raises(ValueError):
        GF2m(65)
    with pytest.raises(ValueError):
        GF2m(0)


@pytest.mark.short
def test_distributivity():
    f = GF2m(32)
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = (rng.randrange(f.order) for _ in range(3))
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))

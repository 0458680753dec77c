import random

import pytest

from borderedsuture.coeff import (
    ExponentVector,
    LaurentMonomial,
    LaurentPolynomial,
    nu,
)


@pytest.mark.short
def test_nu_zero_support_is_one():
    """The zero support gives the identity monomial."""
    assert nu((0, 0, 0)).is_one()
    assert nu(ExponentVector.zero(3)) == LaurentMonomial()


@pytest.mark.short
def test_nu_reads_exponents():
    """nu(1, 0, 2) is x1*x3^2."""
    m = nu((1, 0, 2), length=3)
    assert m.exponents == (1, 0, 2)
    assert str(m) == "x1*x3^2"


@pytest.mark.short
def test_nu_length_mismatch():
    """A support of the wrong length is rejected."""
    with pytest.raises(ValueError):
        nu((1, 0), length=3)


@pytest.mark.short
def test_exponent_vector_addition_requires_equal_length():
    with pytest.raises(ValueError):
        ExponentVector((1, 2)) + ExponentVector((1, 2, 3))


@pytest.mark.short
def test_nu_is_monoid_homomorphism():
    """nu(u + v) = nu(u) * nu(v) on random supports."""
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 7)
        u = ExponentVector(tuple(rng.randint(0, 3) for _ in range(n)))
        v = ExponentVector(tuple(rng.randint(0, 3) for _ in range(n)))
        assert nu(u + v) == nu(u) * nu(v)


@pytest.mark.short
def test_polynomial_addition_is_characteristic_two():
    p = LaurentPolynomial([(1,), (0, 1)])
    assert (p + p).is_zero()
    assert p + LaurentPolynomial.zero() == p


@pytest.mark.short
def test_polynomial_multiplication():
    """(1 + x1)(1 + x1) = 1 + x1^2 over F2."""
    p = LaurentPolynomial([(), (1,)])
    assert p * p == LaurentPolynomial([(), (2,)])


@pytest.mark.short
def test_monomial_inverse():
    p = LaurentPolynomial.monomial((1, -2, 0))
    assert (p * p.inverse()).is_one()
    with pytest.raises(ZeroDivisionError):
        LaurentPolynomial([(), (1,)]).inverse()


@pytest.mark.short
def test_trailing_zeros_are_irrelevant():
    """Monomials do not depend on the number of trailing zero exponents."""
    assert LaurentPolynomial.monomial((1, 0, 0)) == LaurentPolynomial.monomial((1,))
    assert LaurentMonomial((0, 0)).is_one()


@pytest.mark.short
def test_json_form():
    p = LaurentPolynomial([(0, 1), ()])
    assert p.to_json() == [[], [0, 1]]
    assert LaurentPolynomial.from_json(p.to_json()) == p

import random

import pytest

from borderedsuture.coeff import FracScalar, LaurentPolynomial


def random_laurent(rng, nvars=3, nterms=3):
    terms = [
        tuple(rng.randint(-1, 2) for _ in range(nvars)) for _ in range(rng.randint(1, nterms))
    ]
    return LaurentPolynomial(terms)


def random_scalar(rng):
    p = random_laurent(rng)
    while p.is_zero():
        p = random_laurent(rng)
    return FracScalar.from_laurent(p, 3)


@pytest.mark.short
def test_field_axioms_on_random_triples():
    """Associativity, distributivity and inverses on random elements of F2(x1, x2, x3)."""
    rng = random.Random(11)
    for _ in range(25):
        a, b, c = random_scalar(rng), random_scalar(rng), random_scalar(rng)
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * a.inverse() == FracScalar.one(3)
        assert (a + a).is_zero()


@pytest.mark.short
def test_laurent_embedding_respects_products():
    rng = random.Random(5)
    for _ in range(10):
        p, q = random_laurent(rng), random_laurent(rng)
        assert FracScalar.from_laurent(p * q, 3) == FracScalar.from_laurent(
            p, 3
        ) * FracScalar.from_laurent(q, 3)


@pytest.mark.short
def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        FracScalar.zero(2).inverse()


@pytest.mark.short
def test_negative_exponents_clear_to_denominator():
    """x1^-1 equals 1 / x1."""
    inv = FracScalar.from_laurent(LaurentPolynomial.monomial((-1,)), 1)
    x1 = FracScalar.from_laurent(LaurentPolynomial.monomial((1,)), 1)
    assert inv * x1 == FracScalar.one(1)

import random

import pytest

from borderedsuture.coeff import (
    LaurentPolynomial,
    gf2_rank,
    rank_over_fraction_field,
    sparse_rank,
)


def mono(*exponents):
    return LaurentPolynomial.monomial(exponents)


def random_entry(rng, nvars=3, max_degree=4):
    if rng.random() < 0.3:
        return LaurentPolynomial.zero()
    terms = []
    for _ in range(rng.randint(1, 3)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += rng.choice((1, 1, 1, -1))
        terms.append(tuple(exps))
    return LaurentPolynomial(terms)


def random_matrix(rng, proportional=False):
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    matrix = [[random_entry(rng) for _ in range(cols)] for _ in range(rows)]
    if proportional and rows > 1:
        # force a dependency so that low-rank cases are exercised
        matrix[-1] = [p * random_entry(rng) for p in matrix[0]]
    return matrix


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_empty_matrix(mode):
    assert rank_over_fraction_field([], mode=mode) == 0


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_single_nonzero_entry(mode):
    """[x1 + x2] has rank 1."""
    assert rank_over_fraction_field([[mono(1) + mono(0, 1)]], mode=mode) == 1


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_proportional_rows(mode):
    """[[x1, x2], [x1 x3, x2 x3]] has rank 1."""
    matrix = [[mono(1), mono(0, 1)], [mono(1, 0, 1), mono(0, 1, 1)]]
    assert rank_over_fraction_field(matrix, mode=mode) == 1


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_singular_polynomial_matrix(mode):
    """A full-rank and a singular 2x2 matrix of polynomials in x1."""
    one = LaurentPolynomial.one()
    full = [[one + mono(1), one], [one, one + mono(-1)]]
    assert rank_over_fraction_field(full, mode=mode) == 2
    degenerate = [[one + mono(1), one], [one + mono(2), one + mono(1)]]
    # (1 + x)(1 + x) - (1 + x^2) = 0 over F2
    assert rank_over_fraction_field(degenerate, mode=mode) == 1


@pytest.mark.short
def test_probabilistic_rank_is_deterministic():
    rng = random.Random(1)
    matrix = random_matrix(rng)
    ranks = {rank_over_fraction_field(matrix, seed=42) for _ in range(3)}
    assert len(ranks) == 1


@pytest.mark.short
def test_gf2_rank():
    assert gf2_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2
    assert gf2_rank([[1, 0], [0, 1]]) == 2
    assert gf2_rank([]) == 0


@pytest.mark.short
def test_sparse_rank_constant_entries():
    one = LaurentPolynomial.one()
    entries = {(0, 0): one, (1, 0): one, (1, 1): one}
    assert sparse_rank(entries, 2, 2) == 2


@pytest.mark.short
def test_unknown_mode_is_rejected():
    with pytest.raises(ValueError):
        rank_over_fraction_field([[mono(1)]], mode="magic")


@pytest.mark.short
def test_modes_agree_on_random_matrices():
    rng = random.Random(2024)
    for i in range(100):
        matrix = random_matrix(rng, proportional=bool(i % 2))
        assert rank_over_fraction_field(
            matrix, mode="probabilistic", seed=i
        ) == rank_over_fraction_field(matrix, mode="exact")


@pytest.mark.slow
def test_modes_agree_on_many_random_matrices():
    """Probabilistic (m = 32, three points) and exact ranks agree on 1000 matrices."""
    rng = random.Random(99)
    for i in range(1000):
        matrix = random_matrix(rng, proportional=bool(i % 3))
        assert rank_over_fraction_field(
            matrix, mode="probabilistic", seed=i
        ) == rank_over_fraction_field(matrix, mode="exact")

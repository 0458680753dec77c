import pytest

from borderedsuture import constants
from borderedsuture.arcdiagram import ArcDiagram, Chord, disjoint_union
from borderedsuture.coeff import nu
from borderedsuture.strandalg import strands as big
from borderedsuture.strandalg import (
    Strands,
    add,
    basis,
    relation_table,
    strand_algebra,
)
from tests.fixtures import genus1_pmc, six_points, two_interval_torus, zb

RHO1 = Strands(((0, 1),))
RHO2 = Strands(((1, 2),))
RHO3 = Strands(((2, 3),))
RHO12 = Strands(((0, 2),))
RHO23 = Strands(((1, 3),))
RHO123 = Strands(((0, 3),))


def check_d_squared_and_leibniz(algebra):
    elements = algebra.basis()
    for x in elements:
        assert algebra.differential_element(algebra.differential(x)) == frozenset()
    for x in elements:
        for y in elements:
            lhs = algebra.differential_element(algebra.multiply(x, y))
            rhs = add(
                algebra.multiply_elements(algebra.differential(x), [y]),
                algebra.multiply_elements([x], algebra.differential(y)),
            )
            assert lhs == rhs, (x, y)


@pytest.mark.short
def test_genus1_dimension(genus1):
    """dim A(genus-1 circle) = 8."""
    assert len(basis(genus1)) == 8
    assert set(basis(genus1)) == {
        Strands((), (0,)),
        Strands((), (1,)),
        RHO1,
        RHO2,
        RHO3,
        RHO12,
        RHO23,
        RHO123,
    }


@pytest.mark.short
def test_zb_dimension():
    """A(Z_b) is spanned by the two basic idempotents."""
    assert len(basis(zb())) == 2


@pytest.mark.short
def test_empty_diagram_dimension():
    assert len(basis(ArcDiagram("arc", (), ()))) == 1


@pytest.mark.short
def test_idempotent_count(genus1):
    """dim I(Z) = 2^(number of matched pairs)."""
    assert len(strand_algebra(genus1).idempotents()) == 4
    assert len(strand_algebra(six_points()).idempotents()) == 8


@pytest.mark.short
def test_torus_relations(genus1):
    """rho2 rho1 = rho3 rho2 = 0 while rho1 rho2 = rho12 and rho2 rho3 = rho23."""
    algebra = strand_algebra(genus1)
    assert algebra.multiply(RHO2, RHO1) == frozenset()
    assert algebra.multiply(RHO3, RHO2) == frozenset()
    assert algebra.multiply(RHO2, RHO3) == frozenset({RHO23})
    assert algebra.multiply(RHO1, RHO2) == frozenset({RHO12})
    assert algebra.multiply(RHO12, RHO3) == frozenset({RHO123})
    assert algebra.multiply(RHO1, RHO23) == frozenset({RHO123})


@pytest.mark.short
def test_relation_table(genus1):
    table = relation_table(genus1)
    assert {(x, y) for x, y, _ in table} == {
        (RHO1, RHO2),
        (RHO2, RHO3),
        (RHO12, RHO3),
        (RHO1, RHO23),
    }


@pytest.mark.short
def test_idempotent_action(genus1):
    algebra = strand_algebra(genus1)
    iota_a, iota_b = algebra.idempotent({0}), algebra.idempotent({1})
    assert algebra.multiply(iota_a, RHO1) == frozenset({RHO1})
    assert algebra.multiply(iota_b, RHO1) == frozenset()
    assert algebra.multiply(RHO1, iota_b) == frozenset({RHO1})


@pytest.mark.short
def test_double_crossing_vanishes():
    """Two strands crossing twice give zero in the big algebra."""
    first = ((0, 2), (1, 1))
    second = ((1, 3), (2, 2))
    assert big.inversions(first) == 1
    assert big.compose(first, second) is None
    assert big.compose(((0, 1),), ((1, 2),)) == ((0, 2),)


@pytest.mark.short
def test_crossing_free_two_strand_element(genus1):
    algebra = strand_algebra(genus1)
    parallel = Strands(((0, 2), (1, 3)))
    assert algebra.is_basis(parallel)
    assert algebra.differential(parallel) == frozenset()


@pytest.mark.short
def test_differential_resolves_horizontal_crossing(genus1):
    """rho12 with a horizontal pair at {1, 3} crosses the strand at 1."""
    algebra = strand_algebra(genus1)
    x = Strands(((0, 2),), (1,))
    assert algebra.differential(x) == frozenset({Strands(((0, 1), (1, 2)))})


@pytest.mark.short
@pytest.mark.parametrize(
    "z", [genus1_pmc(), zb(), two_interval_torus(), disjoint_union(zb(), zb())]
)
def test_d_squared_and_leibniz_small(z):
    check_d_squared_and_leibniz(strand_algebra(z))


@pytest.mark.slow
@pytest.mark.parametrize(
    "z", [six_points(), disjoint_union(genus1_pmc(), zb())]
)
def test_d_squared_and_leibniz_six_points(z):
    check_d_squared_and_leibniz(strand_algebra(z))


@pytest.mark.short
@pytest.mark.parametrize("z", [genus1_pmc(), two_interval_torus()])
def test_associativity_exhaustive(z):
    algebra = strand_algebra(z)
    elements = algebra.basis()
    for x in elements:
        for y in elements:
            xy = algebra.multiply(x, y)
            for w in elements:
                assert algebra.multiply_elements(xy, [w]) == algebra.multiply_elements(
                    [x], algebra.multiply(y, w)
                )


@pytest.mark.short
def test_associativity_random_six_points():
    import random

    algebra = strand_algebra(six_points())
    elements = algebra.basis()
    rng = random.Random(6)
    for _ in range(300):
        x, y, w = rng.choice(elements), rng.choice(elements), rng.choice(elements)
        assert algebra.multiply_elements(
            algebra.multiply(x, y), [w]
        ) == algebra.multiply_elements([x], algebra.multiply(y, w))


@pytest.mark.short
def test_chord_elements(genus1):
    """a(rho2) has one term; a(rho12) also carries the optional horizontal pair {1, 3}."""
    algebra = strand_algebra(genus1)
    assert algebra.chord_element(Chord(1, 2)) == frozenset({RHO2})
    assert algebra.chord_element(Chord(0, 2)) == frozenset(
        {RHO12, Strands(((0, 2),), (1,))}
    )


@pytest.mark.short
def test_chord_element_support(genus1):
    algebra = strand_algebra(genus1)
    for term in algebra.chord_element(Chord(0, 2)):
        assert algebra.support(term) == (1, 1, 0)


@pytest.mark.short
def test_chord_element_rejects_non_chords():
    algebra = strand_algebra(zb())
    from borderedsuture.errors import InterfaceError

    with pytest.raises(InterfaceError):
        algebra.chord_element(Chord(0, 1))


@pytest.mark.short
def test_supports_feed_nu(genus1):
    """nu([rho1]) nu([rho2]) = nu([rho12]) = x1 x2."""
    algebra = strand_algebra(genus1)
    product = nu(algebra.support(RHO1)) * nu(algebra.support(RHO2))
    assert product == nu(algebra.support(RHO12))
    assert str(product) == "x1*x2"


@pytest.mark.short
def test_products_of_generators_span_the_algebra(genus1):
    """Chord elements and idempotents generate A(Z) under products."""
    algebra = strand_algebra(genus1)
    from borderedsuture.arcdiagram import chords

    span = {algebra.idempotent(key) for key in algebra.idempotents()}
    for chord in chords(genus1):
        span |= algebra.chord_element(chord)
    grown = True
    while grown:
        grown = False
        for x in list(span):
            for y in list(span):
                for term in algebra.multiply(x, y) | algebra.differential(x):
                    if term not in span:
                        span.add(term)
                        grown = True
    assert span <= set(algebra.basis())


@pytest.mark.short
def test_opposite_is_involution(genus1):
    algebra = strand_algebra(genus1)
    for x in algebra.basis():
        assert algebra.opposite().op(algebra.op(x)) == x


@pytest.mark.short
def test_opposite_reverses_products(genus1):
    algebra = strand_algebra(genus1)
    minus = algebra.opposite()
    for x in algebra.basis():
        for y in algebra.basis():
            image = frozenset(algebra.op(t) for t in algebra.multiply(x, y))
            assert image == minus.multiply(algebra.op(y), algebra.op(x))


@pytest.mark.short
def test_algebras_are_shared(genus1):
    same = ArcDiagram("pmc", ((0, 1, 2, 3),), ((0, 2), (1, 3)), 3)
    assert strand_algebra(same) is strand_algebra(genus1)
    assert strand_algebra.cache_info().maxsize == constants.ALGEBRA_CACHE_SIZE


@pytest.mark.short
def test_products_are_memoized(genus1):
    algebra = strand_algebra(genus1)
    first = algebra.multiply(RHO1, RHO2)
    hits = algebra.multiply.cache_info().hits
    assert algebra.multiply(RHO1, RHO2) == first == frozenset({RHO12})
    assert algebra.multiply.cache_info().hits == hits + 1
    assert algebra.multiply.cache_info().maxsize == constants.PRODUCT_CACHE_SIZE

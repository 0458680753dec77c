from pathlib import Path

import pytest

from borderedsuture.arcdiagram import ArcDiagram, load
from borderedsuture.coeff import LaurentPolynomial, nu
from borderedsuture.strandalg import AlgebraMap, Strands, strand_algebra
from borderedsuture.structures import Arrow, TypeD, TypeDA, hom_bimodule


def get_data_path() -> Path:
    return Path(__file__).resolve().parent / "data"


data = get_data_path()


def genus1_pmc() -> ArcDiagram:
    return ArcDiagram("pmc", ((0, 1, 2, 3),), ((0, 2), (1, 3)), 3)


def zb() -> ArcDiagram:
    return ArcDiagram("arc", ((0,), (1,)), ((0, 1),))


def two_interval_torus() -> ArcDiagram:
    """The genus-1 circle cut into two intervals; a full subdiagram of it."""
    return ArcDiagram("arc", ((0, 1), (2, 3)), ((0, 2), (1, 3)))


def six_points() -> ArcDiagram:
    return ArcDiagram("arc", ((0, 1, 2), (3, 4, 5)), ((0, 3), (1, 4), (2, 5)))


@pytest.fixture
def genus1():
    return genus1_pmc()


@pytest.fixture
def zb_diagram():
    return zb()


@pytest.fixture
def genus1_file() -> Path:
    return data / "genus1.json"


@pytest.fixture
def loaded_genus1():
    return load(data / "genus1.json")


# Type D structures over the genus-1 algebra. Idempotent {0} is the pair
# (0, 2), idempotent {1} the pair (1, 3).

RHO1 = Strands(((0, 1),))
RHO2 = Strands(((1, 2),))
RHO3 = Strands(((2, 3),))
RHO12 = Strands(((0, 2),))
RHO23 = Strands(((1, 3),))
RHO123 = Strands(((0, 3),))
A = frozenset({0})
B = frozenset({1})


def solid_torus_inf() -> TypeD:
    """One generator r with delta(r) = rho23 r."""
    algebra = strand_algebra(genus1_pmc())
    return TypeD(algebra, {"r": B}, [Arrow("r", RHO23, "r")], name="inf")


def solid_torus_zero() -> TypeD:
    """One generator r with delta(r) = rho12 r."""
    algebra = strand_algebra(genus1_pmc())
    return TypeD(algebra, {"r": A}, [Arrow("r", RHO12, "r")], name="zero")


def trefoil() -> TypeD:
    """A five-generator trefoil complement."""
    algebra = strand_algebra(genus1_pmc())
    return TypeD(
        algebra,
        {"a": A, "b": A, "c": A, "k": B, "l": B},
        [
            Arrow("a", RHO12, "c"),
            Arrow("b", RHO1, "k"),
            Arrow("b", RHO3, "l"),
            Arrow("c", RHO123, "k"),
            Arrow("l", RHO2, "a"),
        ],
        name="trefoil",
    )


def frac_weights(z: ArcDiagram) -> TypeDA:
    """The identity bimodule with every action weighted by nu of its support."""
    algebra = strand_algebra(z)
    return hom_bimodule(
        AlgebraMap.identity(algebra),
        weight=lambda a: LaurentPolynomial.monomial(nu(algebra.support(a))),
    )

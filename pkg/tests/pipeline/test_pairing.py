import pytest

from borderedsuture.config import ComputeSettings
from borderedsuture.errors import InterfaceError
from borderedsuture.pipeline import PAIRING, double, sutured_pairing
from borderedsuture.strandalg import strand_algebra
from borderedsuture.structures import TypeD, homology_rank, mor_complex
from tests.fixtures import (
    genus1_pmc,
    six_points,
    solid_torus_inf,
    solid_torus_zero,
    trefoil,
)


@pytest.mark.short
def test_two_solid_tori_give_the_sphere():
    verdict = sutured_pairing(solid_torus_inf(), solid_torus_zero(), ComputeSettings(mode="exact"))
    assert verdict.kind == PAIRING
    assert verdict.answer is None
    assert verdict.rank == 1


@pytest.mark.short
def test_double_of_solid_torus():
    assert double(solid_torus_inf()).rank == 2


@pytest.mark.short
@pytest.mark.parametrize("y", [solid_torus_inf(), solid_torus_zero(), trefoil()])
def test_pairing_agrees_with_mor(y):
    """Pairing through the type A side computes the same homology as Mor."""
    assert double(y).rank == homology_rank(mor_complex(y, y))
    assert double(y).rank > 0


@pytest.mark.short
def test_empty_gluing_is_rejected():
    empty = TypeD(strand_algebra(genus1_pmc()), {})
    with pytest.raises(InterfaceError, match="no generators"):
        sutured_pairing(empty, solid_torus_inf())
    with pytest.raises(InterfaceError, match="no generators"):
        sutured_pairing(solid_torus_inf(), empty)


@pytest.mark.short
def test_interface_mismatch():
    other = TypeD(strand_algebra(six_points()), {"x": frozenset()})
    with pytest.raises(InterfaceError):
        sutured_pairing(solid_torus_inf(), other)

import pytest

from borderedsuture.arcdiagram import ArcDiagram, disjoint_union, reverse
from borderedsuture.bimodlib import (
    CAP,
    CUP,
    ONE_HANDLE,
    R_MINUS,
    R_PLUS,
    TWO_HANDLE,
    cup_cap_dd,
    cup_diagram,
    dd_identity,
    interior_handle_dd,
    pointless_cap_dd,
    r_minus_handle_dd,
    r_plus_handle_dd,
    solid_torus_dd,
)
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import TensorAlgebra, strand_algebra
from borderedsuture.structures import check_structure
from tests.fixtures import (
    genus1_pmc,
    six_points,
    solid_torus_inf,
    two_interval_torus,
    zb,
)


@pytest.mark.short
def test_solid_torus_dd():
    assert solid_torus_dd() == solid_torus_inf()


@pytest.mark.short
@pytest.mark.parametrize("handle", [r_minus_handle_dd, r_plus_handle_dd])
def test_r_handles(handle):
    z = six_points()
    dd = handle(z, 2, 5)
    smaller = dd_identity(two_interval_torus())
    assert dd.algebra == TensorAlgebra(
        strand_algebra(z), strand_algebra(reverse(two_interval_torus()))
    )
    assert len(dd) == len(smaller)
    assert len(dd.arrows) == len(smaller.arrows)
    assert check_structure(dd) == []


@pytest.mark.short
def test_r_plus_handle_adds_horizontal_pair():
    dd = r_plus_handle_dd(six_points(), 2, 5)
    for arrow in dd.arrows:
        assert 2 in arrow.label[0].horizontal


@pytest.mark.short
@pytest.mark.parametrize("b, c", [(0, 3), (1, 4), (2, 4)])
def test_r_handle_needs_points_below_terminal_endpoints(b, c):
    with pytest.raises(InterfaceError):
        r_minus_handle_dd(six_points(), b, c)


@pytest.mark.short
def test_cup_diagram():
    z_prime, b, c = cup_diagram(two_interval_torus(), 0)
    assert (b, c) == (4, 5)
    assert z_prime.intervals == ((0, 1, 4), (2, 3), (5,))
    assert z_prime.matching[-1] == (4, 5)


@pytest.mark.short
def test_cup_diagram_of_pmc_cuts_at_basepoint():
    z_prime, b, c = cup_diagram(genus1_pmc(), 0)
    assert z_prime.intervals == ((0, 1, 2, 3, 4), (5,))


@pytest.mark.short
@pytest.mark.parametrize("sign", [R_PLUS, R_MINUS])
def test_cup_and_cap(sign):
    z = two_interval_torus()
    z_prime, _, _ = cup_diagram(z, 0)
    cup = cup_cap_dd(sign, CUP, z, 0)
    cap = cup_cap_dd(sign, CAP, z, 0)
    assert cup.algebra == TensorAlgebra(strand_algebra(z), strand_algebra(reverse(z_prime)))
    assert cap.algebra == TensorAlgebra(strand_algebra(z_prime), strand_algebra(reverse(z)))
    identity = dd_identity(z)
    for dd in (cup, cap):
        assert len(dd) == len(identity)
        assert len(dd.arrows) == len(identity.arrows)
        assert check_structure(dd) == []
    assert cup.name == f"{sign}{CUP}"


@pytest.mark.short
def test_cup_rejects_unknown_sign():
    with pytest.raises(InterfaceError):
        cup_cap_dd("R0", CUP, two_interval_torus(), 0)
    with pytest.raises(InterfaceError):
        cup_cap_dd(R_PLUS, CUP, two_interval_torus(), 5)


@pytest.mark.short
def test_pointless_cap():
    z = ArcDiagram("arc", ((0, 1, 2, 3), ()), ((0, 2), (1, 3)))
    dd = pointless_cap_dd(z)
    assert dd == dd_identity(z)
    assert dd.name == "pointless-cap"


@pytest.mark.short
def test_pointless_cap_needs_a_pointless_interval():
    with pytest.raises(InterfaceError):
        pointless_cap_dd(genus1_pmc())


@pytest.mark.short
def test_interior_two_handle():
    """Each generator of DDId(Zb) gains the arrow rho23 of the solid torus."""
    dd = interior_handle_dd(TWO_HANDLE, zb())
    assert dd.algebra.left == strand_algebra(disjoint_union(genus1_pmc(), zb()))
    assert len(dd) == len(dd_identity(zb())) == 2
    assert len(dd.arrows) == 2
    assert all(arrow.label[0].moving == ((1, 3),) for arrow in dd.arrows)
    assert check_structure(dd) == []


@pytest.mark.short
def test_interior_one_handle_swaps_sides():
    one = interior_handle_dd(ONE_HANDLE, zb())
    two = interior_handle_dd(TWO_HANDLE, zb())
    assert one.algebra == TensorAlgebra(two.algebra.right, two.algebra.left)
    assert len(one.arrows) == len(two.arrows)

import pytest

from borderedsuture.arcdiagram import disjoint_union, reverse
from borderedsuture.bimodlib import aa_identity, dd_identity, dd_to_da
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import Strands, TensorAlgebra, strand_algebra
from borderedsuture.structures import (
    Arrow,
    TypeD,
    box_tensor,
    check_structure,
    homology_rank,
    isomorphic,
    mor_complex,
    reduce,
)
from tests.fixtures import genus1_pmc, six_points, solid_torus_inf, trefoil, zb


@pytest.mark.short
def test_genus1_identity_counts():
    dd = dd_identity(genus1_pmc())
    assert len(dd) == 4
    assert len(dd.arrows) == 4
    assert dd.is_dd
    assert dd.algebra == TensorAlgebra(
        strand_algebra(genus1_pmc()), strand_algebra(reverse(genus1_pmc()))
    )


@pytest.mark.short
def test_genus1_identity_arrows():
    """Every chord joining different pairs gives one arrow out of ({0}, {1})."""
    dd = dd_identity(genus1_pmc())
    a, b = frozenset({0}), frozenset({1})
    left_labels = sorted(
        arrow.label[0].moving for arrow in dd.outgoing((a, b))
    )
    assert left_labels == [((0, 1),), ((0, 3),), ((2, 3),)]
    ((arrow,),) = [dd.outgoing((b, a))]
    assert arrow.label == (Strands(((1, 2),)), Strands(((1, 2),)))
    assert arrow.target == (a, b)


@pytest.mark.short
def test_zb_identity_has_no_arrows():
    dd = dd_identity(zb())
    assert len(dd) == 2
    assert dd.arrows == []


@pytest.mark.short
@pytest.mark.parametrize("diagram", [genus1_pmc(), zb(), six_points()])
def test_identity_satisfies_structure_equation(diagram):
    assert check_structure(dd_identity(diagram)) == []


@pytest.mark.short
def test_mismatched_identity_fails():
    dd = dd_identity(genus1_pmc())
    a, b = frozenset({0}), frozenset({1})
    arrows = [
        Arrow(arrow.source, arrow.label, (frozenset(), a | b))
        if arrow.label[0].moving == ((0, 1),)
        else arrow
        for arrow in dd.arrows
    ]
    broken = TypeD(dd.algebra, dd.generators, arrows)
    assert check_structure(broken) != []


@pytest.mark.short
def test_identity_of_disjoint_union_counts():
    union = dd_identity(disjoint_union(genus1_pmc(), zb()))
    # 2^3 complementary pairs; each genus-1 arrow appears once per zb idempotent
    assert len(union) == 8
    assert len(union.arrows) == 8


@pytest.mark.short
def test_dd_to_da_needs_dd():
    with pytest.raises(InterfaceError):
        dd_to_da(trefoil())


@pytest.mark.slow
def test_identity_da_from_dd():
    da = dd_to_da(dd_identity(genus1_pmc()), reduced=False)
    assert len(da) == 44
    assert da.max_arity <= 1
    assert check_structure(da) == []


@pytest.mark.slow
def test_identity_da_is_reduced():
    unreduced = dd_to_da(dd_identity(genus1_pmc()), reduced=False)
    da = dd_to_da(dd_identity(genus1_pmc()))
    assert len(da) < len(unreduced)
    assert check_structure(da) == []


@pytest.mark.slow
@pytest.mark.parametrize("module, rank", [(solid_torus_inf, 2), (trefoil, 6)])
def test_reduced_identity_da_keeps_ranks(module, rank):
    m = module()
    for reduced in (True, False):
        result = box_tensor(dd_to_da(dd_identity(genus1_pmc()), reduced=reduced), m)
        assert homology_rank(mor_complex(result, result)) == rank


@pytest.mark.slow
def test_identity_da_acts_as_identity():
    t = trefoil()
    da = dd_to_da(dd_identity(genus1_pmc()))
    result = reduce(box_tensor(da, t))
    assert len(result) == 5
    assert isomorphic(result, t)
    assert homology_rank(mor_complex(result, result)) == 6


@pytest.mark.short
def test_aa_identity():
    aa = aa_identity(genus1_pmc())
    assert len(aa) == len(strand_algebra(genus1_pmc()).basis())
    assert check_structure(aa) == []

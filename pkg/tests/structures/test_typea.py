import pytest

from borderedsuture.arcdiagram import embedding
from borderedsuture.bimodlib import aa_identity
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import (
    AlgebraMap,
    Strands,
    hom_inclusion,
    hom_projection,
    strand_algebra,
)
from borderedsuture.structures import (
    ONE,
    AAction,
    Arrow,
    TypeA,
    TypeD,
    box_tensor_ad,
    check_structure,
    homology_rank,
    mor_into,
    restrict,
    to_type_a,
)
from tests.fixtures import (
    A,
    B,
    RHO1,
    genus1_pmc,
    solid_torus_inf,
    solid_torus_zero,
    trefoil,
    two_interval_torus,
)


@pytest.fixture
def small_module():
    algebra = strand_algebra(two_interval_torus())
    return TypeD(
        algebra,
        {"u": A, "v": B},
        [Arrow("u", Strands(((0, 1),)), "v")],
        name="small",
    )


@pytest.mark.short
def test_type_a_dual_satisfies_relations():
    m = to_type_a(solid_torus_inf())
    assert check_structure(m) == []


@pytest.mark.short
def test_type_a_dual_of_trefoil():
    m = to_type_a(trefoil())
    assert m.max_arity == 1
    assert check_structure(m) == []


@pytest.mark.short
def test_unit_action():
    m = to_type_a(solid_torus_inf())
    algebra = m.algebra
    x = next(iter(m.generators))
    key = m.idempotent(x)
    assert m.action(x, (algebra.idempotent(key),)) == [(x, ONE)]
    other = next(k for k in algebra.idempotents() if k != key)
    assert m.action(x, (algebra.idempotent(other),)) == []


@pytest.mark.short
def test_idempotent_inputs_are_implicit():
    algebra = strand_algebra(genus1_pmc())
    with pytest.raises(InterfaceError):
        TypeA(algebra, {"x": A}, [AAction("x", (algebra.idempotent(A),), "x")])


@pytest.mark.short
def test_broken_relation_is_reported():
    algebra = strand_algebra(genus1_pmc())
    m = TypeA(algebra, {"x": A, "y": B}, [AAction("x", (RHO1,), "y")])
    assert check_structure(m) == []
    # m_1(x) = y and m_2(y, rho12) = y, so the relation on (x, rho12) fails.
    broken = TypeA(
        algebra,
        {"x": A, "y": A},
        [AAction("x", (), "y"), AAction("y", (Strands(((0, 2),)),), "y")],
    )
    assert check_structure(broken)


@pytest.mark.short
def test_restrict_along_identity():
    m = to_type_a(trefoil())
    assert restrict(AlgebraMap.identity(m.algebra), m) == m


@pytest.mark.short
def test_restrict_inclusion_after_projection(small_module):
    """p o i = id, so restricting along p then i gives back the module."""
    emb = embedding(two_interval_torus(), genus1_pmc())
    m = to_type_a(small_module)
    lifted = restrict(hom_projection(emb), m)
    assert lifted.algebra == strand_algebra(genus1_pmc())
    assert check_structure(lifted) == []
    assert restrict(hom_inclusion(emb), lifted) == m


@pytest.mark.short
def test_restrict_checks_algebras(small_module):
    emb = embedding(two_interval_torus(), genus1_pmc())
    with pytest.raises(InterfaceError):
        restrict(hom_inclusion(emb), to_type_a(small_module))


@pytest.mark.short
@pytest.mark.parametrize("y", [solid_torus_inf(), trefoil()])
def test_mor_into_identity_is_the_dual(y):
    assert mor_into(y, aa_identity(genus1_pmc())) == to_type_a(y)


@pytest.mark.short
@pytest.mark.parametrize(
    "other, rank", [(solid_torus_zero(), 1), (solid_torus_inf(), 2)]
)
def test_mor_into_identity_pairs_solid_tori(other, rank):
    """S^3 from the 0 and infinity framings, S^1 x S^2 from two infinities."""
    m = mor_into(solid_torus_inf(), aa_identity(genus1_pmc()))
    assert check_structure(m) == []
    assert homology_rank(box_tensor_ad(m, other)) == rank


@pytest.mark.short
def test_mor_into_needs_matching_algebra(small_module):
    with pytest.raises(InterfaceError):
        mor_into(small_module, aa_identity(genus1_pmc()))

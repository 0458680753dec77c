import pytest

from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import strand_algebra
from borderedsuture.structures import (
    ONE,
    ChainComplex,
    TypeD,
    box_tensor,
    check_structure,
    dual,
    homology_rank,
    mor_complex,
)
from tests.fixtures import (
    frac_weights,
    genus1_pmc,
    six_points,
    solid_torus_inf,
    solid_torus_zero,
    trefoil,
)


@pytest.mark.short
def test_zero_differential():
    c = ChainComplex(["a", "b", "c"], {})
    assert homology_rank(c) == 3


@pytest.mark.short
def test_self_pairing_of_solid_torus():
    """Mor(H_inf, H_inf) has rank 2 (S^1 x S^2)."""
    c = mor_complex(solid_torus_inf(), solid_torus_inf())
    assert len(c) == 2
    assert c.check() == []
    assert homology_rank(c) == 2


@pytest.mark.short
def test_pairing_of_two_framings():
    """Mor(H_inf, H_0) is spanned by the single morphism r -> rho2 r."""
    c = mor_complex(solid_torus_inf(), solid_torus_zero())
    assert len(c) == 1
    assert homology_rank(c) == 1


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_compressible_boundary_detects_zero(mode):
    m = solid_torus_inf()
    weighted = box_tensor(frac_weights(genus1_pmc()), m)
    c = mor_complex(m, weighted)
    assert c.coefficients == "Frac"
    assert c.check() == []
    assert homology_rank(c, mode=mode) == 0


@pytest.mark.short
def test_zero_framed_solid_torus_detects_zero():
    m = solid_torus_zero()
    c = mor_complex(m, box_tensor(frac_weights(genus1_pmc()), m))
    assert homology_rank(c) == 0


@pytest.mark.short
def test_trefoil_self_pairing():
    c = mor_complex(trefoil(), trefoil())
    assert c.check() == []
    assert homology_rank(c) == 6


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_trefoil_detector(mode):
    """The trefoil complement has incompressible boundary."""
    t = trefoil()
    c = mor_complex(t, box_tensor(frac_weights(genus1_pmc()), t))
    assert len(c) == 50
    assert c.check() == []
    assert homology_rank(c, mode=mode) == 4


@pytest.mark.short
def test_identity_cycle():
    c = mor_complex(trefoil(), trefoil())
    cycle = c.identity_cycle()
    assert len(cycle) == 5
    assert c.apply(cycle) == {}


@pytest.mark.short
def test_identity_cycle_needs_endomorphisms():
    c = mor_complex(trefoil(), solid_torus_inf())
    with pytest.raises(InterfaceError):
        c.identity_cycle()


@pytest.mark.short
def test_pairing_is_symmetric_under_duals():
    p, q = trefoil(), solid_torus_inf()
    assert homology_rank(mor_complex(p, q)) == homology_rank(mor_complex(dual(q), dual(p)))


@pytest.mark.short
def test_algebra_mismatch():
    other = TypeD(strand_algebra(six_points()), {"x": frozenset()})
    with pytest.raises(InterfaceError):
        mor_complex(solid_torus_inf(), other)


@pytest.mark.short
def test_matrix_entries_use_target_rows():
    c = ChainComplex(["a", "b"], {("a", "b"): ONE})
    assert c.matrix_entries() == {(1, 0): ONE}
    assert check_structure(c) == []

import pytest

from borderedsuture.arcdiagram import ArcDiagram, is_valid
from borderedsuture.bimodlib import (
    NEAR_CHORD,
    ArcslideDatum,
    arcslide_dd,
    check_agreement,
    dd_identity,
    dd_to_da,
    near_complementary,
)
from borderedsuture.bimodlib.arcslide import BOTH, OVER, UNDER
from borderedsuture.errors import InterfaceError
from borderedsuture.structures import box_tensor, check_structure, homology_rank, mor_complex
from tests.fixtures import genus1_pmc, solid_torus_inf, solid_torus_zero, trefoil, zb


@pytest.fixture
def trivial_slide():
    """Sliding 1 over 2 on the genus-1 circle gives the same circle back, twisted."""
    return ArcslideDatum(genus1_pmc(), 1, 2)


@pytest.fixture
def twist():
    """Sliding 1 over 0, the inverse of sliding 1 over 2."""
    return ArcslideDatum(genus1_pmc(), 1, 0)


@pytest.mark.short
def test_slide_under(trivial_slide):
    assert trivial_slide.direction == UNDER
    assert trivial_slide.b2 == 3
    assert trivial_slide.c2 == 0
    assert trivial_slide.target == genus1_pmc()


@pytest.mark.short
def test_slide_over_and_back():
    s = ArcslideDatum(genus1_pmc(), 0, 1)
    assert s.direction == OVER
    assert s.target.intervals == ((1, 2, 3, 0),)
    assert is_valid(s.target)
    assert s.inverse().target == genus1_pmc()


@pytest.mark.short
@pytest.mark.parametrize(
    "z, b1, c1",
    [
        (genus1_pmc(), 0, 2),
        (genus1_pmc(), 0, 7),
        (ArcDiagram("arc", ((0, 1),), ((0, 1),)), 0, 1),
    ],
)
def test_illegal_slides(z, b1, c1):
    with pytest.raises(InterfaceError):
        ArcslideDatum(z, b1, c1)


@pytest.mark.short
def test_pattern_ignores_point_ids(trivial_slide):
    relabelled = ArcDiagram("pmc", ((10, 11, 12, 13),), ((10, 12), (11, 13)), 3)
    assert ArcslideDatum(relabelled, 11, 12).pattern == trivial_slide.pattern


@pytest.mark.short
def test_near_complementary(trivial_slide):
    pairs = near_complementary(trivial_slide)
    assert len(pairs) == 5
    assert (frozenset({0}), frozenset({0})) in pairs


@pytest.mark.short
def test_twists_are_inverse(trivial_slide, twist):
    assert twist.target == genus1_pmc()
    assert twist.inverse() == trivial_slide
    assert trivial_slide.inverse() == twist


@pytest.mark.short
@pytest.mark.parametrize("c1", [0, 2])
def test_shipped_templates(c1):
    s = ArcslideDatum(genus1_pmc(), 1, c1)
    dd = arcslide_dd(s)
    assert len(dd) == 5
    assert set(dd.generators.values()) == set(near_complementary(s))
    assert check_structure(dd) == []
    assert dd.name == f"arcslide[1 over {c1}]"


@pytest.mark.short
def test_no_template_for_pattern():
    s = ArcslideDatum(genus1_pmc(), 0, 1)
    with pytest.raises(InterfaceError, match="No nice arcslide template"):
        arcslide_dd(s)


@pytest.mark.short
def test_identity_is_not_a_slide(trivial_slide):
    tables = {trivial_slide.pattern: dd_identity(genus1_pmc())}
    with pytest.raises(InterfaceError, match="only complementary generators"):
        arcslide_dd(trivial_slide, NEAR_CHORD, tables=tables)
    with pytest.raises(InterfaceError, match="only complementary generators"):
        arcslide_dd(trivial_slide, templates={trivial_slide.pattern: "identity_genus1"})


@pytest.mark.short
def test_near_chord_needs_tables(trivial_slide):
    with pytest.raises(InterfaceError):
        arcslide_dd(trivial_slide, NEAR_CHORD)


@pytest.mark.short
def test_unknown_backend(trivial_slide):
    with pytest.raises(InterfaceError):
        arcslide_dd(trivial_slide, "holomorphic")


@pytest.mark.short
def test_near_chord_table(trivial_slide):
    tables = {trivial_slide.pattern: arcslide_dd(trivial_slide)}
    dd = arcslide_dd(trivial_slide, NEAR_CHORD, tables=tables)
    assert dd.name == "arcslide[1 over 2]"
    assert len(dd) == 5
    assert check_structure(dd) == []


@pytest.mark.short
def test_table_over_wrong_algebra(trivial_slide):
    tables = {trivial_slide.pattern: dd_identity(zb())}
    with pytest.raises(InterfaceError, match="wrong algebras"):
        arcslide_dd(trivial_slide, NEAR_CHORD, tables=tables)


@pytest.mark.short
def test_supplied_template(trivial_slide):
    dd = arcslide_dd(trivial_slide, templates={trivial_slide.pattern: "arcslide_genus1_n"})
    assert len(dd) == 5
    assert dd.name == "arcslide[1 over 2]"


def _slide(c1):
    return dd_to_da(arcslide_dd(ArcslideDatum(genus1_pmc(), 1, c1)))


def _rank(p, q):
    return homology_rank(mor_complex(p, q))


@pytest.mark.slow
@pytest.mark.parametrize(
    "module, rank", [(solid_torus_inf, 2), (solid_torus_zero, 2), (trefoil, 6)]
)
def test_slide_then_inverse(module, rank):
    m = module()
    back = box_tensor(_slide(2), box_tensor(_slide(0), m))
    assert _rank(back, m) == rank


@pytest.mark.slow
def test_slides_twist_along_one_handle():
    """One solid torus has its meridian fixed, the other gets a new slope meeting the old once."""
    da = _slide(0)
    ranks = {
        _rank(box_tensor(da, m), m) for m in (solid_torus_inf(), solid_torus_zero())
    }
    assert ranks == {1, 2}


@pytest.mark.slow
def test_twist_directions_differ():
    """Twisting twice one way, against once each way, gives lens spaces of order 1 and 3."""
    p, n = _slide(0), _slide(2)
    m = solid_torus_inf()
    twice = box_tensor(p, box_tensor(p, m))
    assert _rank(twice, box_tensor(p, m)) == 1
    assert _rank(twice, box_tensor(n, m)) == 3


@pytest.mark.slow
def test_both_backends_agree(trivial_slide):
    tables = {trivial_slide.pattern: arcslide_dd(trivial_slide)}
    nice = arcslide_dd(trivial_slide)
    both = arcslide_dd(trivial_slide, BOTH, tables=tables, probes=[solid_torus_inf()])
    assert both == nice


@pytest.mark.slow
def test_agreement_on_probe():
    dd = dd_identity(genus1_pmc())
    check_agreement(dd, dd, [solid_torus_inf()])

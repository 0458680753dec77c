import json

import pytest

from borderedsuture.arcdiagram import (
    ArcDiagram,
    Chord,
    chords,
    disjoint_union,
    drop_pointless,
    dump,
    empty_diagram,
    is_valid,
    linear_order,
    load,
    nondegeneracy_trace,
    pointless_intervals,
    reverse,
    support,
    validate,
    zb_diagram,
)
from borderedsuture.errors import SchemaError
from tests.fixtures import data, genus1_pmc, six_points, two_interval_torus, zb


@pytest.mark.short
def test_genus1_is_valid(genus1):
    """The genus-1 pointed matched circle is valid, with k = 1."""
    assert validate(genus1) == []
    assert genus1.genus == 1
    assert genus1.n_segments == 3


@pytest.mark.short
def test_zb_is_valid():
    """Z_b: two intervals with one point each, matched."""
    assert validate(zb()) == []


@pytest.mark.short
def test_adjacent_self_matched_pair_is_degenerate():
    """Two adjacent points of one interval matched to each other close off a circle."""
    z = ArcDiagram("arc", ((0, 1),), ((0, 1),))
    errors = validate(z)
    assert len(errors) == 1
    assert "Degenerate" in str(errors[0])


@pytest.mark.short
def test_bad_fixture_is_degenerate():
    assert not is_valid(load(data / "bad.json"))


@pytest.mark.short
def test_degenerate_circle():
    """Matching {0,1},{2,3} on a circle disconnects the surface."""
    z = ArcDiagram("pmc", ((0, 1, 2, 3),), ((0, 1), (2, 3)), 3)
    errors = validate(z)
    assert errors and "Degenerate" in str(errors[0])


@pytest.mark.short
def test_circle_point_count_must_be_multiple_of_four():
    z = ArcDiagram("pmc", ((0, 1),), ((0, 1),), 1)
    assert any("4k" in str(e) for e in validate(z))


@pytest.mark.short
def test_matching_errors_are_named():
    z = ArcDiagram("arc", ((0, 1, 2),), ((0, 1),))
    assert "Unmatched points: [2]" in [str(e) for e in validate(z)]


@pytest.mark.short
def test_trace_of_valid_arc_diagram_has_one_component_per_interval():
    z = six_points()
    assert validate(z) == []
    components = nondegeneracy_trace(z)
    assert len(components) == 2
    assert sum(len(c) for c in components) == 8


@pytest.mark.short
def test_trace_of_circle_is_one_cycle(genus1):
    (cycle,) = nondegeneracy_trace(genus1)
    assert len(cycle) == 4


@pytest.mark.short
def test_reverse_is_involution(genus1):
    assert reverse(reverse(genus1)) == genus1
    assert reverse(reverse(six_points())) == six_points()


@pytest.mark.short
def test_reverse_keeps_genus(genus1):
    minus = reverse(genus1)
    assert validate(minus) == []
    assert minus.genus == 1


@pytest.mark.short
def test_reverse_flips_positions(genus1):
    """Linear position p becomes N - 1 - p, pair indices are kept."""
    minus = reverse(genus1)
    for p in range(4):
        assert minus.position[genus1.point_ids[p]] == 3 - p
    for index, (a, b) in enumerate(genus1.pairs):
        assert minus.pairs[index] == tuple(sorted((3 - a, 3 - b)))


@pytest.mark.short
def test_reverse_of_basepoint_elsewhere():
    """Cutting the circle elsewhere still reverses the linear order."""
    z = ArcDiagram("pmc", ((5, 6, 7, 8),), ((5, 7), (6, 8)), 1)
    assert linear_order(z) == [7, 8, 5, 6]
    assert linear_order(reverse(z)) == [6, 5, 8, 7]


@pytest.mark.short
def test_disjoint_union_with_empty(genus1):
    assert disjoint_union(genus1, empty_diagram()) == genus1


@pytest.mark.short
def test_disjoint_union_of_zb_copies():
    """Z_b u Z_b is a valid four-interval diagram; clashing ids are shifted."""
    z = disjoint_union(zb(), zb())
    assert validate(z) == []
    assert len(z.intervals) == 4
    assert z.n_points == 4
    assert len(set(z.point_ids)) == 4


@pytest.mark.short
def test_disjoint_union_point_count(genus1):
    z = disjoint_union(genus1, six_points())
    assert z.n_points == genus1.n_points + 6
    assert validate(z) == []


@pytest.mark.short
def test_genus1_chords(genus1):
    """Six chords: rho1, rho2, rho3 and their concatenations."""
    assert chords(genus1) == [
        Chord(0, 1),
        Chord(0, 2),
        Chord(0, 3),
        Chord(1, 2),
        Chord(1, 3),
        Chord(2, 3),
    ]


@pytest.mark.short
def test_support_of_rho2(genus1):
    assert support(genus1, Chord(1, 2)) == (0, 1, 0)


@pytest.mark.short
def test_support_is_additive(genus1):
    rho1, rho2, rho12 = Chord(0, 1), Chord(1, 2), Chord(0, 2)
    combined = tuple(
        a + b for a, b in zip(support(genus1, rho1), support(genus1, rho2))
    )
    assert support(genus1, rho12) == combined


@pytest.mark.short
def test_zb_has_no_chords():
    assert chords(zb_diagram()) == []


@pytest.mark.short
def test_arc_diagram_supports_concatenate_intervals():
    z = two_interval_torus()
    assert z.n_segments == 2
    assert support(z, Chord(2, 3)) == (0, 1)


@pytest.mark.short
def test_round_trip(tmp_path, genus1_file):
    z = load(genus1_file)
    assert z == genus1_pmc()
    dump(z, tmp_path / "out.json")
    assert json.loads((tmp_path / "out.json").read_text()) == json.loads(
        genus1_file.read_text()
    )


@pytest.mark.short
def test_schema_errors():
    with pytest.raises(SchemaError):
        ArcDiagram.from_dict({"flavor": "torus", "intervals": [], "matching": []})
    with pytest.raises(SchemaError):
        ArcDiagram.from_dict({"flavor": "arc", "intervals": [[0, 1]], "matching": [[0]]})


@pytest.mark.short
def test_pointless_interval_is_allowed():
    z = ArcDiagram("arc", ((0, 1, 2, 3), ()), ((0, 2), (1, 3)))
    assert is_valid(z)
    assert pointless_intervals(z) == [1]
    assert drop_pointless(z).intervals == ((0, 1, 2, 3),)
    assert pointless_intervals(drop_pointless(z)) == []

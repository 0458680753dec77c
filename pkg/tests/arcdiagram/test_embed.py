import pytest

from borderedsuture.arcdiagram import (
    ArcDiagram,
    SubdiagramKind,
    disjoint_union,
    embed_into_pmc,
    embedding,
    subdiagram_embed,
    validate,
    zb_diagram,
)
from borderedsuture.errors import InterfaceError
from tests.fixtures import six_points, two_interval_torus


@pytest.mark.short
def test_identity_is_full(genus1):
    identity = {p: p for p in genus1.point_ids}
    assert subdiagram_embed(genus1, genus1, identity) == SubdiagramKind.FULL_SUBDIAGRAM


@pytest.mark.short
def test_cut_circle_is_full_subdiagram(genus1):
    """Cutting the genus-1 circle in the middle gives a full subdiagram."""
    small = two_interval_torus()
    assert validate(small) == []
    identity = {p: p for p in small.point_ids}
    assert subdiagram_embed(small, genus1, identity) == SubdiagramKind.FULL_SUBDIAGRAM


@pytest.mark.short
def test_missing_pair_is_not_full():
    big = six_points()
    small = ArcDiagram("arc", ((0, 1), (3, 4)), ((0, 3), (1, 4)))
    point_map = {p: p for p in small.point_ids}
    assert subdiagram_embed(small, big, point_map) == SubdiagramKind.SUBDIAGRAM


@pytest.mark.short
def test_pairs_must_go_to_pairs(genus1):
    small = zb_diagram()
    assert subdiagram_embed(small, genus1, {0: 0, 1: 1}) == SubdiagramKind.NOT_A_SUBDIAGRAM
    assert subdiagram_embed(small, genus1, {0: 0, 1: 2}) == SubdiagramKind.SUBDIAGRAM


@pytest.mark.short
def test_non_injective_map(genus1):
    assert (
        subdiagram_embed(zb_diagram(), genus1, {0: 0, 1: 0})
        == SubdiagramKind.NOT_A_SUBDIAGRAM
    )


@pytest.mark.short
def test_embedding_rejects_non_subdiagrams(genus1):
    with pytest.raises(InterfaceError):
        embedding(zb_diagram(), genus1, {0: 0, 1: 1})


@pytest.mark.short
def test_circle_embeds_into_itself(genus1):
    pmc, emb, used_zb = embed_into_pmc(genus1)
    assert pmc == genus1
    assert emb.full
    assert not used_zb


@pytest.mark.short
def test_zb_needs_a_second_copy():
    """Z_b alone cannot be closed up; gluing another Z_b gives a genus-1 circle."""
    pmc, emb, used_zb = embed_into_pmc(zb_diagram())
    assert used_zb
    assert validate(pmc) == []
    assert pmc.genus == 1
    assert not emb.full


@pytest.mark.short
@pytest.mark.parametrize(
    "z",
    [
        two_interval_torus(),
        six_points(),
        disjoint_union(two_interval_torus(), zb_diagram()),
        disjoint_union(six_points(), six_points()),
    ],
)
def test_embed_into_pmc_gives_valid_circle(z):
    pmc, emb, used_zb = embed_into_pmc(z)
    assert validate(pmc) == []
    assert pmc.n_points % 4 == 0
    assert emb.small == z
    assert emb.full == (not used_zb)

import pytest
import yaml

from borderedsuture.io import checksum
from tests.fixtures import data


@pytest.mark.short
def test_detect_disk_on_solid_torus(bsf, tmp_path):
    report = bsf.report(
        [
            "detect-disk",
            "--cfd",
            data / "solid_torus_inf.json",
            "--pmc",
            data / "genus1.json",
        ],
        tmp_path / "report.json",
    )
    assert report["answer"] == "compressible"
    assert report["rank"] == 0
    assert report["agreement"] is True
    assert report["inputs"] == {
        str(data / "solid_torus_inf.json"): checksum(data / "solid_torus_inf.json"),
        str(data / "genus1.json"): checksum(data / "genus1.json"),
    }


@pytest.mark.short
@pytest.mark.parametrize("mode", ["probabilistic", "exact"])
def test_detect_disk_on_trefoil(bsf, tmp_path, mode):
    report = bsf.report(
        ["detect-disk", "--cfd", data / "trefoil.json", "--mode", mode],
        tmp_path / "report.json",
    )
    assert report["answer"] == "incompressible"
    assert report["rank"] == 4
    assert report["mode"] == mode


@pytest.mark.short
def test_detect_disk_on_factored_description(bsf, tmp_path):
    report = bsf.report(
        ["detect-disk", "--cfd", data / "factored_template.yaml"], tmp_path / "report.json"
    )
    assert report["answer"] == "compressible"
    assert report["pieces"] == ["template:solid_torus_zero"]


@pytest.mark.short
def test_wrong_boundary(bsf):
    result = bsf.call(
        ["detect-disk", "--cfd", data / "solid_torus_inf.json", "--pmc", data / "zb.json"]
    )
    assert result.exit_code == 3


@pytest.mark.short
def test_reports_are_byte_identical(bsf, tmp_path):
    args = ["detect-disk", "--cfd", data / "trefoil.json", "--seed", "3"]
    first, second = tmp_path / "1.json", tmp_path / "2.json"
    bsf.report(args, first)
    bsf.report(args, second)
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.short
def test_seed_from_environment(bsf, tmp_path):
    report = bsf.report(
        ["detect-disk", "--cfd", data / "trefoil.json"],
        tmp_path / "report.json",
        env={"BSF_SEED": "11"},
    )
    assert report["seed"] == 11


@pytest.mark.short
def test_seed_flag_beats_environment(bsf, tmp_path):
    report = bsf.report(
        ["detect-disk", "--cfd", data / "trefoil.json", "--seed", "5"],
        tmp_path / "report.json",
        env={"BSF_SEED": "11"},
    )
    assert report["seed"] == 5


@pytest.mark.short
def test_timing_only_on_request(bsf, tmp_path):
    args = ["detect-disk", "--cfd", data / "solid_torus_inf.json"]
    assert "timing" not in bsf.report(args, tmp_path / "a.json")
    assert "timing" in bsf.report([*args, "--timing"], tmp_path / "b.json")


@pytest.mark.short
def test_pair_two_solid_tori(bsf, tmp_path):
    report = bsf.report(
        ["pair", data / "solid_torus_inf.json", data / "solid_torus_zero.json"],
        tmp_path / "report.json",
    )
    assert report["kind"] == "pairing"
    assert report["rank"] == 1


@pytest.mark.short
def test_double(bsf, tmp_path):
    report = bsf.report(["pair", data / "solid_torus_inf.json"], tmp_path / "report.json")
    assert report["rank"] == 2


@pytest.mark.short
def test_detect_tangle_needs_a_factorization(bsf, tmp_path):
    """A pointed matched circle has one boundary component, which cannot be paired."""
    twists = tmp_path / "twists.yaml"
    twists.write_text(yaml.safe_dump({"twists": {}}))
    result = bsf.call(
        ["detect-tangle", "--bsd", data / "solid_torus_inf.json", "--twists", twists]
    )
    assert result.exit_code == 3


@pytest.mark.short
def test_detect_tangle_derives_the_factorization(bsf):
    result = bsf.call(["detect-tangle", "--bsd", data / "solid_torus_inf.json"])
    assert result.exit_code == 3


@pytest.mark.short
def test_detect_tangle_bad_twist_file(bsf, tmp_path):
    twists = tmp_path / "twists.yaml"
    twists.write_text(yaml.safe_dump({"slides": [[0, 1]]}))
    result = bsf.call(
        ["detect-tangle", "--bsd", data / "solid_torus_inf.json", "--twists", twists]
    )
    assert result.exit_code == 2


@pytest.mark.short
def test_detect_tangle_with_nothing_to_twist(bsf, tmp_path):
    """An empty pairing leaves the identity, so Mor(Y, Y) is never acyclic."""
    twists = tmp_path / "twists.yaml"
    twists.write_text(yaml.safe_dump({"twists": {}, "pairing": []}))
    report = bsf.report(
        ["detect-tangle", "--bsd", data / "solid_torus_inf.json", "--twists", twists],
        tmp_path / "report.json",
    )
    assert report["answer"] == "not-boundary-parallel"
    assert report["rank"] == 2


@pytest.mark.short
def test_unknown_mode(bsf):
    result = bsf.call(["detect-disk", "--cfd", data / "trefoil.json", "--mode", "guess"])
    assert result.exit_code == 2

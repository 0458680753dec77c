import hashlib

import pytest

from borderedsuture.io import checksum, content_hash
from tests.fixtures import data


@pytest.mark.short
def test_checksum_matches_content_hash():
    path = data / "trefoil.json"
    assert checksum(path) == content_hash(path.read_bytes())


@pytest.mark.short
def test_content_hash_of_text():
    assert content_hash("bsf") == hashlib.sha256(b"bsf").hexdigest()

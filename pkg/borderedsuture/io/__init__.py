from borderedsuture.io.hash import checksum, content_hash
from borderedsuture.io.serialization import (
    ARC_DIAGRAM,
    HEEGAARD,
    TYPED,
    TYPEDA,
    canonical_json,
    dump_module,
    file_kind,
    load_any,
    load_module,
    read_data,
    typed_from_dict,
    typed_to_dict,
    typeda_from_dict,
    typeda_to_dict,
    write_json,
)

__all__ = [
    "ARC_DIAGRAM",
    "HEEGAARD",
    "TYPED",
    "TYPEDA",
    "canonical_json",
    "checksum",
    "content_hash",
    "dump_module",
    "file_kind",
    "load_any",
    "load_module",
    "read_data",
    "typed_from_dict",
    "typed_to_dict",
    "typeda_from_dict",
    "typeda_to_dict",
    "write_json",
]

from borderedsuture.pipeline.detect import (
    detect_boundary_parallel,
    detect_compressing_disk,
    load_twists,
    slide_chain,
)
from borderedsuture.pipeline.factored import (
    FactoredDescription,
    assemble,
    build_piece,
    load_factored,
    single_piece,
)
from borderedsuture.pipeline.pairing import double, sutured_pairing
from borderedsuture.pipeline.verdict import (
    BOUNDARY_PARALLEL,
    COMPRESSIBLE,
    COMPRESSING_DISK,
    HOMOLOGY,
    INCOMPRESSIBLE,
    NOT_BOUNDARY_PARALLEL,
    PAIRING,
    PARTLY_BOUNDARY_PARALLEL,
    RankResult,
    Verdict,
    complex_rank,
    homology,
    report,
)

__all__ = [
    "BOUNDARY_PARALLEL",
    "COMPRESSIBLE",
    "COMPRESSING_DISK",
    "HOMOLOGY",
    "INCOMPRESSIBLE",
    "NOT_BOUNDARY_PARALLEL",
    "PAIRING",
    "PARTLY_BOUNDARY_PARALLEL",
    "FactoredDescription",
    "RankResult",
    "Verdict",
    "assemble",
    "build_piece",
    "complex_rank",
    "detect_boundary_parallel",
    "detect_compressing_disk",
    "double",
    "homology",
    "load_twists",
    "load_factored",
    "report",
    "single_piece",
    "slide_chain",
    "sutured_pairing",
]

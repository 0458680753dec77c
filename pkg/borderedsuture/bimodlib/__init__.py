from borderedsuture.bimodlib.arcslide import (
    BACKENDS,
    NEAR_CHORD,
    NICE_DIAGRAM,
    ArcslideDatum,
    arcslide_dd,
    check_agreement,
    near_complementary,
)
from borderedsuture.bimodlib.frac import frac_bimodule, frac_weight
from borderedsuture.bimodlib.handles import (
    CAP,
    CUP,
    ONE_HANDLE,
    R_MINUS,
    R_PLUS,
    TWO_HANDLE,
    cup_cap_dd,
    cup_diagram,
    interior_handle_dd,
    pointless_cap_dd,
    r_minus_handle_dd,
    r_plus_handle_dd,
    solid_torus_dd,
    torus,
)
from borderedsuture.bimodlib.identity import aa_identity, dd_identity, dd_to_da
from borderedsuture.bimodlib.twisting import (
    HALF,
    SINGLE,
    boundary_components,
    twist_factorization,
    twisted_components,
    twisting_bimodule,
)

__all__ = [
    "BACKENDS",
    "CAP",
    "CUP",
    "HALF",
    "NEAR_CHORD",
    "NICE_DIAGRAM",
    "ONE_HANDLE",
    "R_MINUS",
    "R_PLUS",
    "SINGLE",
    "TWO_HANDLE",
    "ArcslideDatum",
    "aa_identity",
    "arcslide_dd",
    "boundary_components",
    "check_agreement",
    "cup_cap_dd",
    "cup_diagram",
    "dd_identity",
    "dd_to_da",
    "frac_bimodule",
    "frac_weight",
    "interior_handle_dd",
    "near_complementary",
    "pointless_cap_dd",
    "r_minus_handle_dd",
    "r_plus_handle_dd",
    "solid_torus_dd",
    "torus",
    "twist_factorization",
    "twisted_components",
    "twisting_bimodule",
]

from borderedsuture.structures.box import (
    box_tensor,
    box_tensor_ad,
    box_tensor_da,
    induct,
)
from borderedsuture.structures.check import check_structure, ensure_structure
from borderedsuture.structures.mor import (
    ChainComplex,
    MorComplex,
    homology_rank,
    mor_complex,
)
from borderedsuture.structures.reduce import reduce
from borderedsuture.structures.typea import (
    AAction,
    TypeA,
    TypeAA,
    mor_into,
    restrict,
    to_type_a,
)
from borderedsuture.structures.typed import (
    F2,
    FRAC,
    ONE,
    ZERO,
    Arrow,
    TypeD,
    accumulate,
    canonical,
    dual,
    generator_label,
    isomorphic,
    tensor_product,
    transpose,
)
from borderedsuture.structures.typeda import (
    DAArrow,
    TypeDA,
    hom_bimodule,
    identity_da,
)

__all__ = [
    "AAction",
    "Arrow",
    "ChainComplex",
    "DAArrow",
    "F2",
    "FRAC",
    "MorComplex",
    "ONE",
    "TypeA",
    "TypeAA",
    "TypeD",
    "TypeDA",
    "ZERO",
    "accumulate",
    "box_tensor",
    "box_tensor_ad",
    "box_tensor_da",
    "canonical",
    "check_structure",
    "dual",
    "ensure_structure",
    "generator_label",
    "hom_bimodule",
    "homology_rank",
    "identity_da",
    "induct",
    "isomorphic",
    "mor_complex",
    "mor_into",
    "reduce",
    "restrict",
    "tensor_product",
    "to_type_a",
    "transpose",
]

from borderedsuture.strandalg.algebra import (
    Algebra,
    StrandAlgebra,
    Strands,
    TensorAlgebra,
    add,
    basis,
    relation_table,
    strand_algebra,
    tensor,
)
from borderedsuture.strandalg.homs import (
    AlgebraMap,
    hom_i_bc,
    hom_i_empty,
    hom_inclusion,
    hom_projection,
    is_dg_map,
    isomorphism,
    opposite_map,
    remove_pair,
    tensor_maps,
    union_map,
    union_split,
)

__all__ = [
    "Algebra",
    "AlgebraMap",
    "StrandAlgebra",
    "Strands",
    "TensorAlgebra",
    "add",
    "basis",
    "hom_i_bc",
    "hom_i_empty",
    "hom_inclusion",
    "hom_projection",
    "is_dg_map",
    "isomorphism",
    "opposite_map",
    "relation_table",
    "remove_pair",
    "strand_algebra",
    "tensor",
    "tensor_maps",
    "union_map",
    "union_split",
]

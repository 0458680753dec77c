from borderedsuture.coeff.frac import FracScalar
from borderedsuture.coeff.gf2m import GF2m, gf2m_arith
from borderedsuture.coeff.laurent import (
    ExponentVector,
    LaurentMonomial,
    LaurentPolynomial,
    nu,
)
from borderedsuture.coeff.rank import (
    EvalPoint,
    gf2_rank,
    rank_over_fraction_field,
    sparse_rank,
)

__all__ = [
    "EvalPoint",
    "ExponentVector",
    "FracScalar",
    "GF2m",
    "LaurentMonomial",
    "LaurentPolynomial",
    "gf2_rank",
    "gf2m_arith",
    "nu",
    "rank_over_fraction_field",
    "sparse_rank",
]

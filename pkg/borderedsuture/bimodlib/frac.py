"""The Frac bimodule: the identity weighted by the supports of the algebra elements."""

from __future__ import annotations

from borderedsuture.arcdiagram import ArcDiagram
from borderedsuture.coeff import LaurentPolynomial, nu
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import AlgebraMap, Strands, strand_algebra
from borderedsuture.structures import TypeDA, hom_bimodule


def frac_weight(z: ArcDiagram, a: Strands) -> LaurentPolynomial:
    """nu([a]): one variable per boundary segment, raised to its multiplicity in [a]."""
    return LaurentPolynomial.monomial(nu(strand_algebra(z).support(a)))


def frac_bimodule(z: ArcDiagram) -> TypeDA:
    """
    One generator per idempotent, delta^1_2(i, a) = nu([a]) a (x) j whenever
    i a j = a. Supports are additive under multiplication, so this is a
    strict action.

    Raises:
        InterfaceError: for diagrams other than pointed matched circles.
    """
    if not z.is_pmc:
        raise InterfaceError("The Frac bimodule is defined for pointed matched circles")
    algebra = strand_algebra(z)
    return hom_bimodule(
        AlgebraMap.identity(algebra),
        weight=lambda a: frac_weight(z, a),
        name="Frac",
    )

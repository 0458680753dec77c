"""Gluing two pieces along a common surface."""

from __future__ import annotations

import logging
import time

from borderedsuture.bimodlib import aa_identity
from borderedsuture.config import ComputeSettings
from borderedsuture.errors import InterfaceError
from borderedsuture.pipeline.verdict import PAIRING, Verdict, complex_rank
from borderedsuture.strandalg import StrandAlgebra
from borderedsuture.structures import TypeD, box_tensor_ad, ensure_structure, mor_into

logger = logging.getLogger("borderedsuture")


def sutured_pairing(
    y1: TypeD, y2: TypeD, settings: ComputeSettings = ComputeSettings()
) -> Verdict:
    """
    Rank of the sutured Floer homology of the union of two pieces.

    y1 becomes a type A module by taking morphisms into the type AA identity
    bimodule, Mor(y1, AAId); boxing that with y2 gives Mor(y1, y2).

    Raises:
        InterfaceError: if either side is empty or the algebras differ.
    """
    for y in (y1, y2):
        if len(y) == 0:
            raise InterfaceError(f"Cannot glue along {y!r}: it has no generators")
    if not isinstance(y1.algebra, StrandAlgebra):
        raise InterfaceError(f"Cannot glue along {y1!r}: it is not over a strands algebra")
    ensure_structure(y1)
    ensure_structure(y2)
    start = time.time()
    complex_ = box_tensor_ad(mor_into(y1, aa_identity(y1.algebra.z)), y2)
    result = complex_rank(complex_, settings)
    logger.debug(f"{y1.name} glued to {y2.name}: {complex_!r}, rank {result.rank}")
    return Verdict(
        kind=PAIRING,
        answer=None,
        result=result,
        certificate={"generators": [len(y1), len(y2)]},
        elapsed=time.time() - start,
    )


def double(y: TypeD, settings: ComputeSettings = ComputeSettings()) -> Verdict:
    """The double of a piece: y glued to itself."""
    return sutured_pairing(y, y, settings)

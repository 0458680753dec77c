"""Compressing-disk and boundary-parallel detection by twisted morphism complexes."""

from __future__ import annotations

import logging
import time
from pathlib import Path
from typing import Mapping, Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from borderedsuture.arcdiagram import ArcDiagram
from borderedsuture.bimodlib import (
    HALF,
    NICE_DIAGRAM,
    ArcslideDatum,
    frac_bimodule,
    twisting_bimodule,
)
from borderedsuture.config import ComputeSettings
from borderedsuture.errors import InterfaceError, SchemaError
from borderedsuture.io import read_data
from borderedsuture.model import TwistModel
from borderedsuture.pipeline.verdict import (
    BOUNDARY_PARALLEL,
    COMPRESSIBLE,
    COMPRESSING_DISK,
    INCOMPRESSIBLE,
    NOT_BOUNDARY_PARALLEL,
    PARTLY_BOUNDARY_PARALLEL,
    Verdict,
    complex_rank,
)
from borderedsuture.strandalg import StrandAlgebra
from borderedsuture.structures import (
    TypeD,
    TypeDA,
    box_tensor,
    ensure_structure,
    mor_complex,
)

logger = logging.getLogger("borderedsuture")


def _boundary(d: TypeD) -> ArcDiagram:
    if d.is_dd or not isinstance(d.algebra, StrandAlgebra):
        raise InterfaceError(f"{d!r} must be a type D structure over a single strands algebra")
    return d.algebra.z


def twisted_mor(
    d: TypeD,
    bimodule: TypeDA,
    kind: str,
    answers: tuple[str, str],
    settings: ComputeSettings,
) -> Verdict:
    """
    The rank of H_* Mor(d, bimodule [x] d), with answers[0] when it vanishes
    and answers[1] otherwise.
    """
    start = time.time()
    twisted = box_tensor(bimodule, d, settings.iteration_cap)
    complex_ = mor_complex(d, twisted)
    result = complex_rank(complex_, settings)
    answer = answers[0] if result.rank == 0 else answers[1]
    verdict = Verdict(
        kind=kind,
        answer=answer,
        result=result,
        certificate={
            "generators": len(d),
            "twisted_generators": len(twisted),
            "bimodule": bimodule.name,
        },
        elapsed=time.time() - start,
    )
    logger.debug(f"Mor({d.name}, {bimodule.name} [x] {d.name}): {complex_!r}")
    return verdict


def detect_compressing_disk(
    cfd: TypeD, settings: ComputeSettings = ComputeSettings()
) -> Verdict:
    """
    Decide whether the boundary of a bordered 3-manifold has a homologically
    essential compressing disk.

    Args:
        cfd: A type D structure over A(Z), Z a pointed matched circle.
        settings: Rank mode, seed and caps.

    Returns:
        A verdict, compressible exactly when the Frac-twisted morphism
        complex is acyclic.

    Raises:
        InterfaceError: if Z is not a pointed matched circle.
        StructureError: if cfd does not satisfy the structure equation.
    """
    z = _boundary(cfd)
    if not z.is_pmc:
        raise InterfaceError("Compressing disks are detected for pointed matched circles only")
    ensure_structure(cfd)
    return twisted_mor(
        cfd, frac_bimodule(z), COMPRESSING_DISK, (COMPRESSIBLE, INCOMPRESSIBLE), settings
    )


def detect_boundary_parallel(
    bsd: TypeD,
    factorization: Optional[Mapping[int, Sequence[ArcslideDatum]]] = None,
    pairing: Optional[Sequence[tuple[int, int]]] = None,
    which: str = HALF,
    index: Optional[int] = None,
    settings: ComputeSettings = ComputeSettings(),
    backend: str = NICE_DIAGRAM,
    tables: Optional[Mapping[str, TypeD]] = None,
    templates: Optional[Mapping] = None,
) -> Verdict:
    """
    Decide whether a tangle is partly boundary parallel, or with a single
    twist whether the selected component is boundary parallel.

    `factorization` gives, for boundary components to twist, the arcslides
    realizing the Dehn twist along them; other components use the derived
    factorization of twist_factorization.

    Raises:
        InterfaceError: on a pairing mismatch or a missing factorization.
    """
    z = _boundary(bsd)
    ensure_structure(bsd)
    tau = twisting_bimodule(
        z,
        factorization,
        pairing,
        which,
        index,
        backend,
        tables,
        templates,
        settings.iteration_cap,
    )
    return twisted_mor(
        bsd,
        tau,
        BOUNDARY_PARALLEL,
        (PARTLY_BOUNDARY_PARALLEL, NOT_BOUNDARY_PARALLEL),
        settings,
    )


def slide_chain(z: ArcDiagram, slides: Sequence[tuple[int, int]]) -> list[ArcslideDatum]:
    """Arcslides applied one after the other, starting on z."""
    chain = []
    for b1, c1 in slides:
        s = ArcslideDatum(z, b1, c1)
        chain.append(s)
        z = s.target
    return chain


def load_twists(path: Path | str, z: ArcDiagram) -> tuple[dict, Optional[list], dict]:
    """
    Read a twist factorization file for the boundary z.

    Returns:
        The factorization by boundary component, the pairing (None for the
        default one) and the arcslide templates by pattern.
    """
    data = read_data(path)
    try:
        model = TwistModel.model_validate(data)
    except PydanticValidationError as e:
        raise SchemaError(f"Invalid twist factorization {path}: {e}")
    factorization = {
        component: slide_chain(z, slides) for component, slides in model.twists.items()
    }
    return factorization, model.pairing, dict(model.templates)

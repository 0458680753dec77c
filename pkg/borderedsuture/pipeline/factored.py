"""Modules described as box tensor products of elementary pieces."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Union

from pydantic import ValidationError as PydanticValidationError

from borderedsuture import arcdiagram
from borderedsuture.arcdiagram import ArcDiagram
from borderedsuture.bimodlib import (
    CAP,
    CUP,
    NICE_DIAGRAM,
    ArcslideDatum,
    arcslide_dd,
    cup_cap_dd,
    dd_identity,
    dd_to_da,
    interior_handle_dd,
    pointless_cap_dd,
    r_minus_handle_dd,
    r_plus_handle_dd,
)
from borderedsuture.config import ComputeSettings
from borderedsuture.errors import InterfaceError, SchemaError
from borderedsuture.heegaard import bsd_from_nice_diagram, load_template
from borderedsuture.heegaard import load as load_diagram
from borderedsuture.io import load_module, read_data
from borderedsuture.model import ArcDiagramModel, FactoredModel, PieceModel
from borderedsuture.strandalg import StrandAlgebra, strand_algebra
from borderedsuture.structures import TypeD, box_tensor, ensure_structure, reduce

logger = logging.getLogger("borderedsuture")


@dataclass
class FactoredDescription:
    """
    Pieces Y_n, ..., Y_1 of a module, in the order they are written.

    Relative paths in the pieces are resolved against `base`.
    """

    pieces: list[PieceModel]
    boundary: Optional[ArcDiagram] = None
    name: Optional[str] = None
    base: Path = field(default_factory=Path.cwd)
    inputs: list[Path] = field(default_factory=list)

    @classmethod
    def from_model(cls, model: FactoredModel, base: Path) -> "FactoredDescription":
        description = cls(list(model.pieces), None, model.name, base)
        if model.boundary is not None:
            description.boundary = description.resolve_diagram(model.boundary)
        return description

    def resolve(self, path: str) -> Path:
        resolved = Path(path)
        if not resolved.is_absolute():
            resolved = self.base / resolved
        if resolved not in self.inputs:
            self.inputs.append(resolved)
        return resolved

    def resolve_diagram(self, diagram: Union[str, ArcDiagramModel]) -> ArcDiagram:
        if isinstance(diagram, str):
            return arcdiagram.load(self.resolve(diagram))
        return ArcDiagram.from_model(diagram)

    def describe(self) -> list[str]:
        """Short labels of the pieces, for reports."""
        labels = []
        for piece in self.pieces:
            detail = piece.path or piece.name
            if piece.kind == "arcslide":
                detail = f"{piece.b1} over {piece.c1}"
            labels.append(f"{piece.kind}:{detail}" if detail else piece.kind)
        return labels


def load_factored(path: Path | str) -> FactoredDescription:
    path = Path(path)
    data = read_data(path)
    try:
        model = FactoredModel.model_validate(data)
    except PydanticValidationError as e:
        raise SchemaError(f"Invalid factored description {path}: {e}")
    description = FactoredDescription.from_model(model, path.parent)
    if description.name is None:
        description.name = path.stem
    return description


def single_piece(path: Path | str) -> FactoredDescription:
    """A description made of one raw module file."""
    path = Path(path)
    description = FactoredDescription(
        [PieceModel(kind="module", path=path.name)], name=path.stem, base=path.parent
    )
    return description


def _interface(d: TypeD) -> ArcDiagram:
    if not isinstance(d.algebra, StrandAlgebra):
        raise InterfaceError(f"{d!r} is not a type D structure over a single strands algebra")
    return d.algebra.z


def build_piece(
    description: FactoredDescription,
    piece: PieceModel,
    interface: Optional[ArcDiagram],
    backend: str = NICE_DIAGRAM,
    tables: Optional[Mapping[str, TypeD]] = None,
    templates: Optional[Mapping] = None,
) -> TypeD:
    """
    The module of one piece. Pieces without an explicit `diagram` are built
    on the interface they attach to.
    """
    if piece.kind == "module":
        module = load_module(description.resolve(piece.path))
        if not isinstance(module, TypeD):
            raise InterfaceError(f"Piece {piece.path} is not a type D or DD structure")
        return module
    if piece.kind == "diagram":
        return bsd_from_nice_diagram(load_diagram(description.resolve(piece.path)))
    if piece.kind == "template":
        return bsd_from_nice_diagram(load_template(piece.name))

    if piece.diagram is not None:
        z = description.resolve_diagram(piece.diagram)
    elif interface is not None:
        z = interface
    else:
        raise InterfaceError(f"A {piece.kind} piece cannot come last without a diagram")

    if piece.kind == "identity":
        return dd_identity(z)
    if piece.kind == "arcslide":
        return arcslide_dd(ArcslideDatum(z, piece.b1, piece.c1), backend, tables, templates)
    if piece.kind == "r-minus":
        return r_minus_handle_dd(z, piece.b, piece.c)
    if piece.kind == "r-plus":
        return r_plus_handle_dd(z, piece.b, piece.c)
    if piece.kind == "cup":
        return cup_cap_dd(piece.sign, CUP, z, piece.interval)
    if piece.kind == "cap":
        return cup_cap_dd(piece.sign, CAP, z, piece.interval)
    if piece.kind == "pointless-cap":
        return pointless_cap_dd(z)
    return interior_handle_dd(piece.kind, z)


def assemble(
    description: FactoredDescription,
    settings: ComputeSettings = ComputeSettings(),
    reduce_between: bool = True,
    backend: str = NICE_DIAGRAM,
    tables: Optional[Mapping[str, TypeD]] = None,
    templates: Optional[Mapping] = None,
) -> TypeD:
    """
    Fold the pieces from the right: the last one is a type D structure, every
    other one a DD bimodule turned into a DA bimodule and boxed onto it.

    Raises:
        InterfaceError: if consecutive interfaces do not match, or the final
            boundary differs from the declared one.
        TerminationError: if a box tensor product or reduction hits the cap.
    """
    *outer, last = description.pieces
    current = build_piece(description, last, None, backend, tables, templates)
    if current.is_dd:
        raise InterfaceError("The last piece must be a type D structure, not a DD bimodule")
    current = ensure_structure(current)
    for piece in reversed(outer):
        dd = build_piece(description, piece, _interface(current), backend, tables, templates)
        if not dd.is_dd:
            raise InterfaceError(f"The {piece.kind} piece must be a DD bimodule")
        da = dd_to_da(dd, settings.iteration_cap)
        current = box_tensor(da, current, settings.iteration_cap)
        if reduce_between:
            current = reduce(current, settings.iteration_cap)
        logger.debug(f"after {piece.kind}: {current!r}")
    if description.boundary is not None and current.algebra != strand_algebra(
        description.boundary
    ):
        raise InterfaceError(
            f"The assembled module is over {current.algebra!r}, "
            f"not over the declared boundary {description.boundary}"
        )
    current.name = description.name
    return ensure_structure(current)

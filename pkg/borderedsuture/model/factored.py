from typing import Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from borderedsuture.model.arcdiagram import ArcDiagramModel

PieceKind = Literal[
    "module",
    "diagram",
    "template",
    "identity",
    "arcslide",
    "r-minus",
    "r-plus",
    "cup",
    "cap",
    "pointless-cap",
    "one-handle",
    "two-handle",
]

# Parameters each piece kind cannot do without.
REQUIRED = {
    "module": ("path",),
    "diagram": ("path",),
    "template": ("name",),
    "arcslide": ("b1", "c1"),
    "r-minus": ("diagram", "b", "c"),
    "r-plus": ("diagram", "b", "c"),
    "cup": ("diagram", "sign", "interval"),
    "cap": ("sign", "interval"),
}


class PieceModel(BaseModel):
    """One bordered-sutured piece of a factored description"""

    model_config = ConfigDict(extra="forbid")

    kind: PieceKind
    path: Optional[str] = None
    name: Optional[str] = None
    diagram: Optional[Union[str, ArcDiagramModel]] = None
    b1: Optional[int] = None
    c1: Optional[int] = None
    b: Optional[int] = None
    c: Optional[int] = None
    sign: Optional[Literal["R+", "R-"]] = None
    interval: Optional[int] = None

    @model_validator(mode="after")
    def has_required_parameters(self):
        missing = [p for p in REQUIRED.get(self.kind, ()) if getattr(self, p) is None]
        if missing:
            raise ValueError(f"A {self.kind} piece needs {', '.join(missing)}")
        return self


class FactoredModel(BaseModel):
    """
    A module written as a box tensor product of pieces.

    Pieces are listed as in Y_n * ... * Y_1: the last piece is the type D
    structure the others act on.
    """

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    boundary: Optional[Union[str, ArcDiagramModel]] = None
    pieces: List[PieceModel] = Field(min_length=1)

    @classmethod
    def from_yaml(cls, yaml_str: str):
        """Alternative constructor that loads from YAML string"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class TwistModel(BaseModel):
    """
    Arcslide factorizations of boundary Dehn twists.

    `twists` maps a boundary component to its slides (b1, c1), each taken on
    the diagram left by the previous one. `templates` supplies nice arcslide
    diagrams by slide pattern.
    """

    model_config = ConfigDict(extra="forbid")

    twists: Dict[int, List[Tuple[int, int]]] = Field(default_factory=dict)
    pairing: Optional[List[Tuple[int, int]]] = None
    templates: Dict[str, str] = Field(default_factory=dict)

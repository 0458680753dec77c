from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from borderedsuture.model.arcdiagram import ArcDiagramModel


class SidesModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    left: Optional[ArcDiagramModel] = None
    right: Optional[ArcDiagramModel] = None


class EndpointModel(BaseModel):
    """Where an alpha arc meets the bordered boundary"""

    model_config = ConfigDict(extra="forbid")

    side: Literal["left", "right"]
    point: int
    alpha: str


class EdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["alpha", "beta", "boundary", "suture"]
    curve: Optional[str] = None
    tail: str
    head: str


class HeegaardModel(BaseModel):
    """File model for a nice bordered-sutured Heegaard diagram"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_id: Literal["bsf.heegaard/1"] = Field(alias="schema")
    name: Optional[str] = None
    sides: SidesModel
    alpha_circles: List[str] = []
    beta_circles: List[str]
    points: Dict[str, List[str]]
    endpoints: Dict[str, EndpointModel] = {}
    vertices: List[str] = []
    edges: Dict[str, EdgeModel]
    regions: Dict[str, List[str]]

    @field_validator("points")
    @classmethod
    def points_lie_on_two_curves(cls, points):
        for name, curves in points.items():
            if len(curves) != 2:
                raise ValueError(f"Point {name} must name one alpha and one beta curve")
        return points

    @field_validator("regions")
    @classmethod
    def words_are_signed(cls, regions):
        for name, word in regions.items():
            if not word:
                raise ValueError(f"Region {name} has an empty boundary word")
            for entry in word:
                if entry[:1] not in ("+", "-") or len(entry) < 2:
                    raise ValueError(f"Region {name}: '{entry}' is not a signed edge")
        return regions

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, field_validator


class ArcDiagramModel(BaseModel):
    """File model for an arc diagram or a pointed matched circle"""

    model_config = ConfigDict(extra="forbid")

    flavor: Literal["pmc", "arc"]
    intervals: List[List[int]]
    matching: List[List[int]]
    basepointAfter: Optional[int] = None

    @field_validator("matching")
    @classmethod
    def pairs_have_two_points(cls, matching):
        for pair in matching:
            if len(pair) != 2:
                raise ValueError(f"Matched pair {pair} must have exactly two points")
        return matching

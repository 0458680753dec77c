from typing import List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field

from borderedsuture.model.arcdiagram import ArcDiagramModel


class StrandsModel(BaseModel):
    """A strand-diagram basis element in linear positions"""

    model_config = ConfigDict(extra="forbid")

    moving: List[List[int]] = []
    horizontal: List[int] = []


class AlgebraPairModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    left: ArcDiagramModel
    right: ArcDiagramModel


class IdempotentPairModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    left: List[int]
    right: List[int]


class LabelPairModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    left: StrandsModel
    right: StrandsModel


class GeneratorModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    idempotent: Union[List[int], IdempotentPairModel]


class ArrowModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    source: str
    target: str
    label: Union[StrandsModel, LabelPairModel]
    scalar: List[List[int]] = [[]]


class DAArrowModel(ArrowModel):
    inputs: List[StrandsModel] = []


class TypeDModel(BaseModel):
    """File model for type D and type DD structures"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_id: Literal["bsf.typed/1"] = Field(alias="schema")
    algebra: Union[ArcDiagramModel, AlgebraPairModel]
    coefficients: Literal["F2", "Frac"] = "F2"
    generators: List[GeneratorModel]
    arrows: List[ArrowModel] = []
    name: Optional[str] = None

    @classmethod
    def from_yaml(cls, yaml_str: str):
        """Alternative constructor that loads from YAML (or JSON) text"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class TypeDAModel(BaseModel):
    """File model for type DA bimodules"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_id: Literal["bsf.typeda/1"] = Field(alias="schema")
    algebra: AlgebraPairModel
    coefficients: Literal["F2", "Frac"] = "F2"
    generators: List[GeneratorModel]
    arrows: List[DAArrowModel] = []
    name: Optional[str] = None

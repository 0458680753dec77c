from borderedsuture.model.arcdiagram import ArcDiagramModel
from borderedsuture.model.factored import FactoredModel, PieceModel, TwistModel
from borderedsuture.model.heegaard import HeegaardModel
from borderedsuture.model.modules import (
    DAArrowModel,
    TypeDAModel,
    TypeDModel,
)

__all__ = [
    "ArcDiagramModel",
    "DAArrowModel",
    "FactoredModel",
    "HeegaardModel",
    "PieceModel",
    "TypeDAModel",
    "TypeDModel",
    "TwistModel",
]

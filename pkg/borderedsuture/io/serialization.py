"""Readers and writers for modules, diagrams and reports.

Files are read with yaml.safe_load, so JSON and YAML inputs are both
accepted; everything written is canonical JSON.
"""

import json
import logging
from pathlib import Path
from typing import Any, Union

import yaml
from pydantic import ValidationError as PydanticValidationError

from borderedsuture.arcdiagram import ArcDiagram
from borderedsuture.coeff import LaurentPolynomial
from borderedsuture.constants import HEEGAARD_SCHEMA, TYPED_SCHEMA, TYPEDA_SCHEMA
from borderedsuture.errors import SchemaError
from borderedsuture.heegaard import NiceDiagram
from borderedsuture.model import TypeDAModel, TypeDModel
from borderedsuture.strandalg import TensorAlgebra, strand_algebra
from borderedsuture.structures import (
    Arrow,
    DAArrow,
    TypeD,
    TypeDA,
    generator_label,
)

logger = logging.getLogger("borderedsuture")

ARC_DIAGRAM = "arc-diagram"
HEEGAARD = "heegaard"
TYPED = "typed"
TYPEDA = "typeda"

Module = Union[TypeD, TypeDA]


def read_data(path: Path | str) -> Any:
    path = Path(path)
    try:
        with open(path, "r") as f:
            return yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise SchemaError(f"{path}: cannot parse: {e}")


def canonical_json(data: Any) -> str:
    """Sorted keys, two-space indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_json(data: Any, path: Path | str) -> None:
    with open(path, "w") as f:
        f.write(canonical_json(data))


def _diagram(algebra) -> dict:
    return algebra.z.to_dict()


def _names(m: Module) -> dict:
    names = {x: generator_label(x) for x in m.generators}
    if len(set(names.values())) != len(names):
        raise SchemaError(f"Generator names of {m!r} collide when written out")
    return names


def typed_to_dict(d: TypeD) -> dict:
    algebra = d.algebra
    names = _names(d)
    data: dict = {"schema": TYPED_SCHEMA}
    if d.name:
        data["name"] = d.name
    if isinstance(algebra, TensorAlgebra):
        data["algebra"] = {"left": _diagram(algebra.left), "right": _diagram(algebra.right)}
    else:
        data["algebra"] = _diagram(algebra)
    data["coefficients"] = d.coefficients
    data["generators"] = [
        {"name": names[x], "idempotent": algebra.idempotent_to_json(key)}
        for x, key in d.generators.items()
    ]
    data["arrows"] = [
        {
            "source": names[a.source],
            "target": names[a.target],
            "label": algebra.label_to_json(a.label),
            "scalar": a.scalar.to_json(),
        }
        for a in d.arrows
    ]
    return data


def _validate(model, data: Any, what: str):
    try:
        return model.model_validate(data)
    except PydanticValidationError as e:
        raise SchemaError(f"Invalid {what}: {e}")


def typed_from_dict(data: Any) -> TypeD:
    model = _validate(TypeDModel, data, "type D structure")
    if hasattr(model.algebra, "flavor"):
        algebra = strand_algebra(ArcDiagram.from_model(model.algebra))
    else:
        algebra = TensorAlgebra(
            strand_algebra(ArcDiagram.from_model(model.algebra.left)),
            strand_algebra(ArcDiagram.from_model(model.algebra.right)),
        )
    generators = {}
    for g in model.generators:
        if g.name in generators:
            raise SchemaError(f"Generator {g.name} is declared twice")
        generators[g.name] = algebra.idempotent_from_json(g.idempotent)
    arrows = [
        Arrow(
            a.source,
            algebra.label_from_json(a.label),
            a.target,
            LaurentPolynomial.from_json(a.scalar),
        )
        for a in model.arrows
    ]
    d = TypeD(algebra, generators, arrows, model.coefficients, model.name)
    logger.debug(f"read {d!r}")
    return d


def typeda_to_dict(m: TypeDA) -> dict:
    left, right = m.left_algebra, m.right_algebra
    names = _names(m)
    data: dict = {"schema": TYPEDA_SCHEMA}
    if m.name:
        data["name"] = m.name
    data["algebra"] = {"left": _diagram(left), "right": _diagram(right)}
    data["coefficients"] = m.coefficients
    data["generators"] = [
        {
            "name": names[x],
            "idempotent": {
                "left": left.idempotent_to_json(key[0]),
                "right": right.idempotent_to_json(key[1]),
            },
        }
        for x, key in m.generators.items()
    ]
    data["arrows"] = [
        {
            "source": names[a.source],
            "inputs": [right.label_to_json(b) for b in a.inputs],
            "target": names[a.target],
            "label": left.label_to_json(a.output),
            "scalar": a.scalar.to_json(),
        }
        for a in m.arrows
    ]
    return data


def typeda_from_dict(data: Any) -> TypeDA:
    model = _validate(TypeDAModel, data, "type DA bimodule")
    left = strand_algebra(ArcDiagram.from_model(model.algebra.left))
    right = strand_algebra(ArcDiagram.from_model(model.algebra.right))
    generators = {}
    for g in model.generators:
        if not hasattr(g.idempotent, "left"):
            raise SchemaError(f"Generator {g.name} of a DA bimodule needs a left and right idempotent")
        generators[g.name] = (
            left.idempotent_from_json(g.idempotent.left),
            right.idempotent_from_json(g.idempotent.right),
        )
    arrows = [
        DAArrow(
            a.source,
            tuple(right.label_from_json(b) for b in a.inputs),
            left.label_from_json(a.label),
            a.target,
            LaurentPolynomial.from_json(a.scalar),
        )
        for a in model.arrows
    ]
    return TypeDA(left, right, generators, arrows, model.coefficients, model.name)


def file_kind(data: Any) -> str:
    """Which format a parsed file is in, by its schema tag."""
    if not isinstance(data, dict):
        raise SchemaError("Expected a mapping at the top level")
    schema = data.get("schema")
    if schema == TYPED_SCHEMA:
        return TYPED
    if schema == TYPEDA_SCHEMA:
        return TYPEDA
    if schema == HEEGAARD_SCHEMA:
        return HEEGAARD
    if schema is None and "flavor" in data:
        return ARC_DIAGRAM
    raise SchemaError(f"Unknown schema '{schema}'")


def load_module(path: Path | str) -> Module:
    data = read_data(path)
    kind = file_kind(data)
    if kind == TYPED:
        return typed_from_dict(data)
    if kind == TYPEDA:
        return typeda_from_dict(data)
    raise SchemaError(f"{path} holds a {kind}, not a module")


def load_any(path: Path | str) -> tuple[str, Any]:
    """Parse any input file into its object; returns (kind, object)."""
    data = read_data(path)
    kind = file_kind(data)
    if kind == TYPED:
        return kind, typed_from_dict(data)
    if kind == TYPEDA:
        return kind, typeda_from_dict(data)
    if kind == HEEGAARD:
        h = NiceDiagram.from_dict(data)
        if h.name is None:
            h.name = Path(path).stem
        return kind, h
    return kind, ArcDiagram.from_dict(data)


def dump_module(m: Module, path: Path | str) -> None:
    data = typed_to_dict(m) if isinstance(m, TypeD) else typeda_to_dict(m)
    write_json(data, path)

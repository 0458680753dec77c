from borderedsuture.heegaard.diagram import (
    HeegaardGenerator,
    NiceDiagram,
    algebra_sides,
    disjoint_union,
    dump,
    generators,
    is_valid,
    load,
    mirror,
    validate,
)
from borderedsuture.heegaard.evaluate import bsd_from_nice_diagram
from borderedsuture.heegaard.registry import (
    arcslide_templates,
    load_template,
    template_names,
)

__all__ = [
    "HeegaardGenerator",
    "NiceDiagram",
    "algebra_sides",
    "arcslide_templates",
    "bsd_from_nice_diagram",
    "disjoint_union",
    "dump",
    "generators",
    "is_valid",
    "load",
    "load_template",
    "mirror",
    "template_names",
    "validate",
]

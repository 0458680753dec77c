"""Nice diagrams shipped with the package."""

import json
import logging
from functools import lru_cache
from importlib import resources as impresources

from borderedsuture.errors import InterfaceError
from borderedsuture.heegaard.diagram import NiceDiagram

from . import templates

logger = logging.getLogger("borderedsuture")

INDEX = "index.json"


@lru_cache(maxsize=None)
def _index() -> dict:
    with (impresources.files(templates) / INDEX).open("r") as f:
        return json.load(f)


def template_names() -> list[str]:
    return sorted(_index()["templates"])


def load_template(name: str) -> NiceDiagram:
    """Load a shipped diagram by its name in the templates index."""
    files = _index()["templates"]
    if name not in files:
        raise InterfaceError(
            f"No shipped template '{name}'; available: {', '.join(sorted(files))}"
        )
    with (impresources.files(templates) / files[name]).open("r") as f:
        h = NiceDiagram.from_dict(json.load(f))
    if h.name is None:
        h.name = name
    logger.debug(f"loaded template {name}: {h!r}")
    return h


def arcslide_templates() -> dict[str, str]:
    """Slide pattern -> template name, for slides with a shipped nice diagram."""
    return dict(_index()["arcslides"])

"""cli command reporting strands algebras"""

from pathlib import Path

import click

from borderedsuture import arcdiagram
from borderedsuture.io import canonical_json
from borderedsuture.strandalg import basis, relation_table

from .utils.logging import logger
from .utils.options import out_option
from .utils.validation import emit, exit_on_error


@click.command(name="algebra")
@click.option(
    "-a",
    "--arc-diagram",
    "diagram",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Arc diagram JSON file.",
)
@out_option
@exit_on_error
def algebra(diagram, out):
    """Report the basis and the nonzero products of A(Z)."""
    z = arcdiagram.ensure_valid_diagram(arcdiagram.load(diagram))
    elements = basis(z)
    relations = [
        {"left": str(x), "right": str(y), "product": sorted(str(p) for p in product)}
        for x, y, product in relation_table(z)
    ]
    data = {
        "diagram": z.to_dict(),
        "dimension": len(elements),
        "basis": [str(a) for a in elements],
        "idempotents": sum(1 for a in elements if a.is_idempotent()),
        "relations": relations,
    }
    logger.info(
        f"A({Path(diagram).stem}) has dimension {len(elements)} "
        f"and {len(relations)} nonzero products"
    )
    emit(canonical_json(data), out)

"""borderedsuture CLI"""

import click

from borderedsuture import __version__
from borderedsuture.cli.algebra import algebra
from borderedsuture.cli.detect import detect_disk, detect_tangle, pair
from borderedsuture.cli.modules import homology, module, mor, tensor, validate

from .debug import add_debug_option


@click.group()
@click.version_option(__version__, prog_name="bsf")
@click.pass_context
def cli(ctx):
    """
    Bordered-sutured Floer homology: strands algebras, type D structures,
    and the compressing-disk and boundary-parallel detectors.
    """
    ctx.ensure_object(dict)


for command in (
    algebra,
    module,
    tensor,
    mor,
    homology,
    detect_disk,
    detect_tangle,
    pair,
    validate,
):
    cli.add_command(add_debug_option(command))

add_debug_option(cli)

if __name__ == "__main__":
    cli(obj={})

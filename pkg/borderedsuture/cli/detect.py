"""cli commands applying the detection criteria and the pairing theorem"""

import click
import humanfriendly

from borderedsuture import arcdiagram
from borderedsuture.bimodlib import BACKENDS, HALF, NICE_DIAGRAM, SINGLE
from borderedsuture.errors import InterfaceError
from borderedsuture.pipeline import (
    Verdict,
    detect_boundary_parallel,
    detect_compressing_disk,
    double,
    load_twists,
    report,
    sutured_pairing,
)
from borderedsuture.strandalg import strand_algebra
from borderedsuture.structures import reduce

from .utils.logging import logger
from .utils.options import compute_options, out_option, reduce_option, timing_option
from .utils.validation import emit, exit_on_error, load_type_d, resolve_settings


def _log_verdict(verdict: Verdict, subject: str) -> None:
    answer = f"{verdict.answer}, " if verdict.answer else ""
    logger.info(
        f"{subject}: {answer}rank {verdict.rank} ({verdict.result.mode}, seed "
        f"{verdict.result.seed}) in {humanfriendly.format_timespan(verdict.elapsed or 0)}"
    )


@click.command(name="detect-disk")
@click.option(
    "--cfd",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Type D structure of the bordered manifold, a nice diagram, or a factored description.",
)
@click.option(
    "--pmc",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Expected boundary, as a pointed matched circle.",
)
@compute_options
@reduce_option
@timing_option
@out_option
@exit_on_error
def detect_disk(cfd, pmc, mode, seed, reduce_result, timing, out):
    """Decide whether the boundary has a homologically essential compressing disk."""
    settings = resolve_settings(mode, seed)
    d, inputs, pieces = load_type_d(cfd, settings, reduce_result)
    if pmc is not None:
        z = arcdiagram.ensure_valid_diagram(arcdiagram.load(pmc))
        if d.algebra != strand_algebra(z):
            raise InterfaceError(f"{cfd} is not a type D structure over A({pmc})")
        inputs.append(pmc)
    if reduce_result:
        d = reduce(d, settings.iteration_cap)
    verdict = detect_compressing_disk(d, settings)
    verdict.pieces = pieces
    verdict.with_inputs(inputs)
    _log_verdict(verdict, d.name)
    emit(report(verdict, timing), out)


@click.command(name="detect-tangle")
@click.option(
    "--bsd",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Type D structure of the tangle complement.",
)
@click.option(
    "--twists",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML file with arcslide factorizations of boundary twists; derived when absent.",
)
@click.option(
    "--single",
    "index",
    type=int,
    default=None,
    help="Twist only the boundary pair with this index.",
)
@click.option(
    "--backend",
    type=click.Choice(BACKENDS),
    default=NICE_DIAGRAM,
    help="How arcslide bimodules are obtained.",
)
@compute_options
@reduce_option
@timing_option
@out_option
@exit_on_error
def detect_tangle(bsd, twists, index, backend, mode, seed, reduce_result, timing, out):
    """Decide whether a tangle is partly boundary parallel."""
    settings = resolve_settings(mode, seed)
    d, inputs, pieces = load_type_d(bsd, settings, reduce_result)
    if d.is_dd:
        raise InterfaceError(f"{bsd} is a DD bimodule, not a type D structure")
    if reduce_result:
        d = reduce(d, settings.iteration_cap)
    factorization, pairing, templates = {}, None, {}
    if twists is not None:
        factorization, pairing, templates = load_twists(twists, d.algebra.z)
    verdict = detect_boundary_parallel(
        d,
        factorization,
        pairing,
        HALF if index is None else SINGLE,
        index,
        settings,
        backend,
        templates=templates,
    )
    verdict.pieces = pieces
    verdict.with_inputs([*inputs, twists] if twists else inputs)
    _log_verdict(verdict, d.name)
    emit(report(verdict, timing), out)


@click.command(name="pair")
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False), required=False)
@compute_options
@reduce_option
@timing_option
@out_option
@exit_on_error
def pair(first, second, mode, seed, reduce_result, timing, out):
    """
    Glue FIRST to SECOND along their common boundary and report the rank of
    the sutured Floer homology. Without SECOND, FIRST is glued to itself.
    """
    settings = resolve_settings(mode, seed)
    y1, inputs, pieces = load_type_d(first, settings, reduce_result)
    if second is None:
        verdict = double(y1, settings)
        subject = f"double of {y1.name}"
    else:
        y2, inputs2, pieces2 = load_type_d(second, settings, reduce_result)
        verdict = sutured_pairing(y1, y2, settings)
        inputs, pieces = inputs + inputs2, pieces + pieces2
        subject = f"{y1.name} glued to {y2.name}"
    verdict.pieces = pieces
    verdict.with_inputs(inputs)
    _log_verdict(verdict, subject)
    emit(report(verdict, timing), out)

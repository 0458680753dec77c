"""cli commands building type D structures and their morphism complexes"""

from pathlib import Path

import click

from borderedsuture.arcdiagram import validate as validate_arc_diagram
from borderedsuture.bimodlib import dd_to_da
from borderedsuture.errors import InterfaceError, SchemaError, ValidationError
from borderedsuture.heegaard import validate as validate_heegaard
from borderedsuture.io import (
    ARC_DIAGRAM,
    HEEGAARD,
    canonical_json,
    load_any,
    load_module,
    read_data,
    typed_to_dict,
)
from borderedsuture.pipeline import homology as homology_verdict
from borderedsuture.pipeline import load_factored, report
from borderedsuture.structures import (
    TypeD,
    box_tensor,
    check_structure,
    generator_label,
    mor_complex,
    reduce,
)

from .utils.logging import logger
from .utils.options import compute_options, out_option, reduce_option, timing_option
from .utils.validation import (
    emit,
    exit_on_error,
    is_factored,
    load_type_d,
    resolve_settings,
)


@click.command(name="module")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@reduce_option
@out_option
@exit_on_error
def module(source, reduce_result, out):
    """
    Build a type D structure from SOURCE and write it out.

    SOURCE is a type D/DD file, a nice Heegaard diagram, or a factored
    description.
    """
    settings = resolve_settings(None, None)
    d, _, _ = load_type_d(source, settings, reduce_result)
    if reduce_result:
        d = reduce(d, settings.iteration_cap)
    logger.info(f"{d.name}: {len(d)} generators, {len(d.arrows)} arrows")
    emit(canonical_json(typed_to_dict(d)), out)


@click.command(name="tensor")
@click.option(
    "-b",
    "--bimodule",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Type DA bimodule, or a DD bimodule to be turned into one.",
)
@click.option(
    "-m",
    "--module",
    "module_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Type D structure the bimodule acts on.",
)
@reduce_option
@out_option
@exit_on_error
def tensor(bimodule, module_path, reduce_result, out):
    """Box tensor product of a bimodule with a type D structure."""
    settings = resolve_settings(None, None)
    m = load_module(bimodule)
    if isinstance(m, TypeD):
        m = dd_to_da(m, settings.iteration_cap)
    d, _, _ = load_type_d(module_path, settings, reduce_result)
    result = box_tensor(m, d, settings.iteration_cap)
    if reduce_result:
        result = reduce(result, settings.iteration_cap)
    result.name = f"{m.name or Path(bimodule).stem} [x] {d.name}"
    logger.info(f"{result.name}: {len(result)} generators")
    emit(canonical_json(typed_to_dict(result)), out)


def _pair_of_modules(p, q, settings, reduce_result):
    d1, inputs1, pieces1 = load_type_d(p, settings, reduce_result)
    d2, inputs2, pieces2 = load_type_d(q, settings, reduce_result)
    if reduce_result:
        d1 = reduce(d1, settings.iteration_cap)
        d2 = reduce(d2, settings.iteration_cap)
    return d1, d2, inputs1 + inputs2, pieces1 + pieces2


@click.command(name="mor")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@reduce_option
@out_option
@exit_on_error
def mor(source, target, reduce_result, out):
    """Describe the morphism complex Mor(SOURCE, TARGET)."""
    settings = resolve_settings(None, None)
    p, q, _, _ = _pair_of_modules(source, target, settings, reduce_result)
    c = mor_complex(p, q)
    data = {
        "source": p.name,
        "target": q.name,
        "coefficients": c.coefficients,
        "dimension": len(c),
        "entries": len(c.differential),
        "basis": sorted(generator_label(b) for b in c.basis),
    }
    logger.info(f"Mor({p.name}, {q.name}): {c!r}")
    emit(canonical_json(data), out)


@click.command(name="homology")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@compute_options
@reduce_option
@timing_option
@out_option
@exit_on_error
def homology(source, target, mode, seed, reduce_result, timing, out):
    """Rank of the homology of Mor(SOURCE, TARGET)."""
    settings = resolve_settings(mode, seed)
    p, q, inputs, pieces = _pair_of_modules(source, target, settings, reduce_result)
    verdict = homology_verdict(mor_complex(p, q), settings)
    verdict.pieces = pieces
    verdict.with_inputs(inputs)
    logger.info(f"H_* Mor({p.name}, {q.name}) has rank {verdict.rank}")
    emit(report(verdict, timing), out)


def _diagnostics(path: Path):
    data = read_data(path)
    if is_factored(data):
        load_factored(path)
        return []
    kind, loaded = load_any(path)
    if kind == ARC_DIAGRAM:
        return validate_arc_diagram(loaded)
    if kind == HEEGAARD:
        return validate_heegaard(loaded)
    return check_structure(loaded)


@click.command(name="validate")
@click.option(
    "-i",
    "--input",
    "--diagram",
    "source",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Any input file: arc diagram, Heegaard diagram, module or factored description.",
)
@exit_on_error
def validate(source):
    """Check an input file against its schema and its structural conditions."""
    path = Path(source)
    try:
        errors = _diagnostics(path)
    except InterfaceError as e:
        raise SchemaError(e.message)
    if errors:
        raise ValidationError(*errors)
    logger.info(f"{path.name} is valid")

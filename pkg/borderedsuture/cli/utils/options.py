import click

from borderedsuture.constants import MODE_ENVVAR, MODES, SEED_ENVVAR


def compute_options(f):
    """--mode and --seed, falling back to the environment, then the config file."""
    f = click.option(
        "--seed",
        type=int,
        default=None,
        envvar=SEED_ENVVAR,
        show_envvar=True,
        help="Seed for the probabilistic rank evaluation points.",
    )(f)
    f = click.option(
        "--mode",
        type=click.Choice(MODES),
        default=None,
        envvar=MODE_ENVVAR,
        show_envvar=True,
        help="Rank computation mode.",
    )(f)
    return f


def _on_off(ctx, param, value) -> bool:
    return value == "on"


def reduce_option(f):
    return click.option(
        "--reduce",
        "reduce_result",
        type=click.Choice(["on", "off"]),
        default="on",
        show_default=True,
        callback=_on_off,
        help="Cancel unit arrows after every box tensor product.",
    )(f)


def out_option(f):
    return click.option(
        "-o",
        "--out",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="Write the output here instead of stdout.",
    )(f)


def timing_option(f):
    return click.option(
        "--timing/--no-timing",
        default=False,
        help="Include the computation time in reports.",
    )(f)

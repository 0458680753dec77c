from functools import wraps

import click

from .utils.logging import configure_logging

DEBUG_KEY = "DEBUG"


def _debug_option() -> click.Option:
    return click.Option(
        ["--debug/--no-debug"],
        is_eager=True,
        expose_value=False,
        callback=_set_debug,
        help="Log intermediate sizes, reductions and rank checks.",
    )


def add_debug_option(cmd):
    """Give a command or group the eager --debug/--no-debug flag."""
    if isinstance(cmd, click.Command):
        if not any(param.name == "debug" for param in cmd.params):
            cmd.params.insert(0, _debug_option())
        return cmd

    @click.option(
        "--debug/--no-debug",
        is_eager=True,
        expose_value=False,
        callback=_set_debug,
        help="Log intermediate sizes, reductions and rank checks.",
    )
    @wraps(cmd)
    def wrapper(*args, **kwargs):
        return cmd(*args, **kwargs)

    return wrapper


def _set_debug(ctx: click.Context, param, value: bool) -> bool:
    """Record the flag on the root context and reconfigure logging."""
    root = ctx.find_root()
    root.ensure_object(dict)
    root.obj.setdefault(DEBUG_KEY, False)

    # A subcommand may switch debugging on, but only the top level switches it off.
    if value is True or len(ctx.command_path.split()) == 1:
        root.obj[DEBUG_KEY] = value

    configure_logging(root.obj[DEBUG_KEY])
    return root.obj[DEBUG_KEY]

"""Cancellation of idempotent-labelled arrows (homotopy reduction)."""

from __future__ import annotations

import logging
from typing import Optional, Union

from borderedsuture import constants
from borderedsuture.errors import InterfaceError, TerminationError
from borderedsuture.structures.typed import Arrow, TypeD, accumulate, generator_label
from borderedsuture.structures.typeda import DAArrow, TypeDA

logger = logging.getLogger("borderedsuture")

Module = Union[TypeD, TypeDA]


def _table(m: Module) -> dict:
    """(source, inputs, label, target) -> scalar."""
    if isinstance(m, TypeDA):
        return {(s, i, o, t): c for (s, i, o, t), c in m._arrows.items()}
    return {(s, (), a, t): c for (s, a, t), c in m._arrows.items()}


def _output_algebra(m: Module):
    return m.left_algebra if isinstance(m, TypeDA) else m.algebra


def _sort_key(entry) -> tuple:
    (s, i, a, t), _ = entry
    return (generator_label(s), generator_label(t), len(i), repr(a))


def _find_cancellable(m: Module, table: dict) -> Optional[tuple]:
    algebra = _output_algebra(m)
    for (s, i, a, t), c in sorted(table.items(), key=_sort_key):
        if not i and s != t and algebra.is_idempotent(a) and c.is_monomial():
            return s, a, t, c
    return None


def _cancel(m: Module, table: dict, x, label, y, scalar, cap: int) -> dict:
    """Remove x and y, rerouting every zigzag w -> y <- x -> z into w -> z."""
    algebra = _output_algebra(m)
    inverse = scalar.inverse()
    leaving_x = [
        (i, a, t, c)
        for (s, i, a, t), c in table.items()
        if s == x and not (i == () and a == label and t == y)
    ]
    into_y = [
        (s, i, a, c) for (s, i, a, t), c in table.items() if t == y and s not in (x, y)
    ]
    new: dict = {
        key: c for key, c in table.items() if not {key[0], key[3]} & {x, y}
    }
    for w, inputs, b, c in into_y:
        frontier = {(inputs, b): c * inverse}
        steps = 0
        while frontier:
            steps += 1
            if steps > cap:
                raise TerminationError(
                    f"Cancelling {generator_label(x)} -> {generator_label(y)} "
                    f"did not settle within {cap} zigzags"
                )
            following: dict = {}
            for (prefix, left), coefficient in frontier.items():
                for more, a, z, e in leaving_x:
                    for term in algebra.multiply(left, a):
                        if z == y:
                            accumulate(following, (prefix + more, term), coefficient * e * inverse)
                        elif z != x:
                            accumulate(new, (w, prefix + more, term, z), coefficient * e)
            frontier = following
    return new


def reduce(m: Module, cap: int = constants.DEFAULT_ITERATION_CAP) -> Module:
    """
    Cancel arrows x -> iota (x) y with an invertible scalar until none remain.

    Each cancellation is the standard homotopy-equivalence (Gaussian
    elimination) step. Candidates are chosen in a fixed order so that the
    result is deterministic.

    Raises:
        TerminationError: if a single cancellation needs more than cap zigzags.
    """
    if not isinstance(m, (TypeD, TypeDA)):
        raise InterfaceError(f"Cannot reduce {m!r}")
    table = _table(m)
    generators = dict(m.generators)
    cancelled = 0
    while True:
        found = _find_cancellable(m, table)
        if found is None:
            break
        x, label, y, scalar = found
        table = _cancel(m, table, x, label, y, scalar, cap)
        del generators[x]
        del generators[y]
        cancelled += 1
    logger.debug(f"reduce: cancelled {cancelled} pairs, {len(generators)} generators left")
    if isinstance(m, TypeDA):
        return TypeDA(
            m.left_algebra,
            m.right_algebra,
            generators,
            [DAArrow(s, i, a, t, c) for (s, i, a, t), c in table.items()],
            m.coefficients,
            m.name,
        )
    return TypeD(
        m.algebra,
        generators,
        [Arrow(s, a, t, c) for (s, _, a, t), c in table.items()],
        m.coefficients,
        m.name,
    )

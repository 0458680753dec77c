"""Structure equations for every kind of module.

check_structure never raises: it returns ValidationError diagnostics naming
the generator (and inputs) where an equation fails.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, Union

from borderedsuture.errors import StructureError, ValidationError
from borderedsuture.structures.mor import ChainComplex
from borderedsuture.structures.typea import TypeA, TypeAA
from borderedsuture.structures.typed import F2, ONE, TypeD, accumulate, generator_label
from borderedsuture.structures.typeda import TypeDA

logger = logging.getLogger("borderedsuture")

Checkable = Union[TypeD, TypeDA, TypeA, TypeAA, ChainComplex]

# Longest input sequence tested for A-infinity relations.
MAX_CHECK_LENGTH = 3


def _describe(algebra, inputs: Iterable) -> str:
    return ", ".join(algebra.describe(a) for a in inputs)


def _check_scalars(m, scalars: Iterable) -> list[ValidationError]:
    if m.coefficients == F2 and any(not c.is_one() for c in scalars):
        return [ValidationError(f"{m!r} has coefficients F2 but carries non-unit scalars")]
    return []


def _check_typed(d: TypeD) -> list[ValidationError]:
    algebra = d.algebra
    errors = _check_scalars(d, (a.scalar for a in d.arrows))
    for arrow in d.arrows:
        if algebra.left_idempotent(arrow.label) != d.idempotent(arrow.source) or (
            algebra.right_idempotent(arrow.label) != d.idempotent(arrow.target)
        ):
            errors.append(
                ValidationError(
                    f"Arrow {generator_label(arrow.source)} -> {generator_label(arrow.target)} "
                    f"labelled {algebra.describe(arrow.label)} does not match the idempotents"
                )
            )
    if errors:
        return errors
    for x in d.generators:
        total: dict = {}
        for first in d.outgoing(x):
            for term in algebra.differential(first.label):
                accumulate(total, (term, first.target), first.scalar)
            for second in d.outgoing(first.target):
                for term in algebra.multiply(first.label, second.label):
                    accumulate(total, (term, second.target), first.scalar * second.scalar)
        if total:
            errors.append(
                ValidationError(
                    f"Structure equation fails at generator {generator_label(x)}: "
                    f"{len(total)} surviving terms, e.g. "
                    + ", ".join(
                        f"{algebra.describe(a)}*{generator_label(y)}"
                        for a, y in list(total)[:3]
                    )
                )
            )
    return errors


def _sequences(algebra, start, length: int):
    if length == 0:
        yield ()
        return
    for a in algebra.non_idempotent_basis():
        if algebra.left_idempotent(a) == start:
            for rest in _sequences(algebra, algebra.right_idempotent(a), length - 1):
                yield (a,) + rest


def _alternatives(algebra, inputs: tuple):
    """Input sequences from d of one entry or the product of two neighbours."""
    for k, a in enumerate(inputs):
        for term in algebra.differential(a):
            yield inputs[:k] + (term,) + inputs[k + 1 :]
    for k in range(len(inputs) - 1):
        for term in algebra.multiply(inputs[k], inputs[k + 1]):
            yield inputs[:k] + (term,) + inputs[k + 2 :]


def _check_typeda(m: TypeDA, max_length: int) -> list[ValidationError]:
    left, right = m.left_algebra, m.right_algebra
    errors = _check_scalars(m, (a.scalar for a in m.arrows))
    for arrow in m.arrows:
        chain = [m.right_idempotent(arrow.source)]
        for a in arrow.inputs:
            if right.left_idempotent(a) != chain[-1]:
                break
            chain.append(right.right_idempotent(a))
        ok = (
            len(chain) == len(arrow.inputs) + 1
            and chain[-1] == m.right_idempotent(arrow.target)
            and left.left_idempotent(arrow.output) == m.left_idempotent(arrow.source)
            and left.right_idempotent(arrow.output) == m.left_idempotent(arrow.target)
        )
        if not ok:
            errors.append(
                ValidationError(
                    f"Arrow {generator_label(arrow.source)} -> {generator_label(arrow.target)} "
                    f"on inputs ({_describe(right, arrow.inputs)}) does not match the idempotents"
                )
            )
    if errors:
        return errors
    longest = min(2 * m.max_arity, max_length)
    for x in m.generators:
        for length in range(longest + 1):
            for inputs in _sequences(right, m.right_idempotent(x), length):
                total: dict = {}
                for split in range(length + 1):
                    for out1, y, c1 in m.action(x, inputs[:split]):
                        for out2, z, c2 in m.action(y, inputs[split:]):
                            for term in left.multiply(out1, out2):
                                accumulate(total, (term, z), c1 * c2)
                for out, y, c in m.action(x, inputs):
                    for term in left.differential(out):
                        accumulate(total, (term, y), c)
                for other in _alternatives(right, inputs):
                    for out, y, c in m.action(x, other):
                        accumulate(total, (out, y), c)
                if total:
                    errors.append(
                        ValidationError(
                            f"DA structure equation fails at {generator_label(x)} on inputs "
                            f"({_describe(right, inputs)}): {len(total)} surviving terms"
                        )
                    )
    return errors


def _check_typea(m: TypeA, max_length: int) -> list[ValidationError]:
    algebra = m.algebra
    errors = _check_scalars(m, (a.scalar for a in m.actions))
    for action in m.actions:
        key = m.idempotent(action.source)
        for a in action.inputs:
            if algebra.left_idempotent(a) != key:
                key = None
                break
            key = algebra.right_idempotent(a)
        if key != m.idempotent(action.target):
            errors.append(
                ValidationError(
                    f"Action {generator_label(action.source)} -> {generator_label(action.target)} "
                    f"on inputs ({_describe(algebra, action.inputs)}) does not match the idempotents"
                )
            )
    if errors:
        return errors
    longest = min(2 * m.max_arity, max_length)
    for x in m.generators:
        for length in range(longest + 1):
            for inputs in _sequences(algebra, m.idempotent(x), length):
                total: dict = {}
                for split in range(length + 1):
                    for y, c1 in m.action(x, inputs[:split]):
                        for z, c2 in m.action(y, inputs[split:]):
                            accumulate(total, z, c1 * c2)
                for other in _alternatives(algebra, inputs):
                    for y, c in m.action(x, other):
                        accumulate(total, y, c)
                if total:
                    errors.append(
                        ValidationError(
                            f"A-infinity relation fails at {generator_label(x)} on inputs "
                            f"({_describe(algebra, inputs)}): {len(total)} surviving terms"
                        )
                    )
    return errors


def _combine(*vectors: dict) -> dict:
    total: dict = {}
    for vector in vectors:
        for k, c in vector.items():
            accumulate(total, k, c)
    return total


def _check_typeaa(m: TypeAA, limit: int) -> list[ValidationError]:
    """d^2 = 0, the Leibniz rule and associativity of the two actions."""
    errors: list[ValidationError] = []
    left, right = m.left_algebra, m.right_algebra
    left_elements = left.non_idempotent_basis()[:limit]
    right_elements = right.non_idempotent_basis()[:limit]

    def d(vector: dict) -> dict:
        return _combine(*({y: c * e for y, e in m.differential(x).items()} for x, c in vector.items()))

    def act_left(terms, vector: dict) -> dict:
        return _combine(
            *(
                {y: c * e for y, e in m.left_action(a, x).items()}
                for a in terms
                for x, c in vector.items()
            )
        )

    def act_right(vector: dict, terms) -> dict:
        return _combine(
            *(
                {y: c * e for y, e in m.right_action(x, b).items()}
                for b in terms
                for x, c in vector.items()
            )
        )

    for x in list(m.generators)[:limit]:
        name = generator_label(x)
        unit = {x: ONE}
        if d(d(unit)):
            errors.append(ValidationError(f"d^2 does not vanish on {name}"))
        for a in left_elements:
            if _combine(
                d(act_left([a], unit)),
                act_left(left.differential(a), unit),
                act_left([a], d(unit)),
            ):
                errors.append(
                    ValidationError(f"Left Leibniz rule fails for {left.describe(a)} on {name}")
                )
        for b in right_elements:
            if _combine(
                d(act_right(unit, [b])),
                act_right(unit, right.differential(b)),
                act_right(d(unit), [b]),
            ):
                errors.append(
                    ValidationError(f"Right Leibniz rule fails for {right.describe(b)} on {name}")
                )
        for a, b in product(left_elements, right_elements):
            if _combine(
                act_right(act_left([a], unit), [b]), act_left([a], act_right(unit, [b]))
            ):
                errors.append(
                    ValidationError(
                        f"Actions of {left.describe(a)} and {right.describe(b)} "
                        f"do not commute on {name}"
                    )
                )
        for a, a2 in product(left_elements, left_elements):
            if _combine(
                act_left([a], act_left([a2], unit)), act_left(left.multiply(a, a2), unit)
            ):
                errors.append(ValidationError(f"Left action is not associative on {name}"))
        for b, b2 in product(right_elements, right_elements):
            if _combine(
                act_right(act_right(unit, [b]), [b2]), act_right(unit, right.multiply(b, b2))
            ):
                errors.append(ValidationError(f"Right action is not associative on {name}"))
    return errors


def check_structure(
    m: Checkable, max_length: int = MAX_CHECK_LENGTH, limit: int = 64
) -> list[ValidationError]:
    """
    Diagnostics for every failing structure equation of m.

    Args:
        m: A type D, DD, DA, A or AA structure, or a chain complex.
        max_length: Longest input sequence checked for A-infinity relations.
        limit: Number of generators and algebra elements sampled for AA bimodules.

    Returns:
        A list of ValidationError, empty when m passes.
    """
    if isinstance(m, TypeD):
        errors = _check_typed(m)
    elif isinstance(m, TypeDA):
        errors = _check_typeda(m, max_length)
    elif isinstance(m, TypeA):
        errors = _check_typea(m, max_length)
    elif isinstance(m, TypeAA):
        errors = _check_typeaa(m, limit)
    elif isinstance(m, ChainComplex):
        errors = m.check()
    else:
        raise TypeError(f"Cannot check {type(m).__name__}")
    logger.debug(f"structure check of {m!r}: {len(errors)} failures")
    return errors


def ensure_structure(m: Checkable, **kwargs) -> Checkable:
    errors = check_structure(m, **kwargs)
    if errors:
        raise StructureError("\n".join(str(e) for e in errors))
    return m

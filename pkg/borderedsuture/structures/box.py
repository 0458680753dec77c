"""Box tensor products.

Every pairing walks chains of type D arrows y -> a1 y1 -> a2 y2 ... and feeds
the labels to the A-side actions. Chains are pruned as soon as no stored
action starts with the labels collected so far, so each walk is bounded by
the maximal arity of the A side. An arity above the iteration cap is
refused rather than truncated.
"""

from __future__ import annotations

import logging
from typing import Callable, Hashable, Iterator

from borderedsuture import constants
from borderedsuture.errors import InterfaceError, TerminationError
from borderedsuture.strandalg import AlgebraMap
from borderedsuture.structures.mor import ChainComplex
from borderedsuture.structures.typea import TypeA
from borderedsuture.structures.typed import (
    ONE,
    Arrow,
    TypeD,
    accumulate,
    merge_coefficients,
)
from borderedsuture.structures.typeda import DAArrow, TypeDA

logger = logging.getLogger("borderedsuture")


def _check_cap(arity: int, cap: int, what: str) -> None:
    if arity > cap:
        raise TerminationError(
            f"{what} has actions of arity {arity}, above the iteration cap {cap}"
        )


def _chains(
    d: TypeD, y, extends: Callable[[tuple], bool]
) -> Iterator[tuple[tuple, Hashable, object, bool]]:
    """
    Nonempty chains of type D arrows out of y whose labels pass `extends`.

    Yields (labels, end, scalar, unit). A chain whose first arrow carries an
    idempotent label is yielded alone with unit=True and never extended;
    longer chains through idempotents pair to zero with a unital A side.
    """
    stack = [((), y, ONE)]
    while stack:
        labels, current, scalar = stack.pop()
        for arrow in d.outgoing(current):
            if d.algebra.is_idempotent(arrow.label):
                if not labels:
                    yield (arrow.label,), arrow.target, scalar * arrow.scalar, True
                continue
            extended = labels + (arrow.label,)
            if not extends(extended):
                continue
            total = scalar * arrow.scalar
            yield extended, arrow.target, total, False
            stack.append((extended, arrow.target, total))


def box_tensor(
    da: TypeDA, d: TypeD, cap: int = constants.DEFAULT_ITERATION_CAP
) -> TypeD:
    """
    M (box) N for a type DA bimodule M over (A, B) and a type D structure N over B.

    Raises:
        InterfaceError: if N is not over the right algebra of M.
        TerminationError: if M has actions longer than cap.
    """
    if da.right_algebra != d.algebra:
        raise InterfaceError(
            f"Cannot pair {da!r} with {d!r}: the algebras do not match"
        )
    _check_cap(da.max_arity, cap, repr(da))
    left = da.left_algebra
    generators = {
        (x, y): da.left_idempotent(x)
        for x in da.generators
        for y in d.generators
        if da.right_idempotent(x) == d.idempotent(y)
    }
    arrows = []
    for x, y in generators:
        for output, x2, c in da.action(x, ()):
            arrows.append(Arrow((x, y), output, (x2, y), c))
        for labels, y2, scalar, unit in _chains(d, y, lambda s: da.extends(x, s)):
            if unit:
                arrows.append(
                    Arrow((x, y), left.idempotent(da.left_idempotent(x)), (x, y2), scalar)
                )
                continue
            for output, x2, c in da.action(x, labels):
                arrows.append(Arrow((x, y), output, (x2, y2), c * scalar))
    result = TypeD(
        left,
        generators,
        arrows,
        merge_coefficients(da.coefficients, d.coefficients),
        f"{da.name}*{d.name}" if da.name and d.name else None,
    )
    logger.debug(f"box tensor {result!r}")
    return result


def box_tensor_da(
    da1: TypeDA, da2: TypeDA, cap: int = constants.DEFAULT_ITERATION_CAP
) -> TypeDA:
    """
    M1 (box) M2 for DA bimodules over (A, B) and (B, C): a DA bimodule over (A, C).

    Outputs of M2 are collected along chains of its actions (each step may
    consume any number of inputs, including none) and fed to M1.
    """
    if da1.right_algebra != da2.left_algebra:
        raise InterfaceError(
            f"Cannot pair {da1!r} with {da2!r}: the algebras do not match"
        )
    _check_cap(da1.max_arity, cap, repr(da1))
    middle, outer = da2.left_algebra, da1.left_algebra
    generators = {
        (x1, x2): (da1.left_idempotent(x1), da2.right_idempotent(x2))
        for x1 in da1.generators
        for x2 in da2.generators
        if da1.right_idempotent(x1) == da2.left_idempotent(x2)
    }
    steps: dict = {}
    for arrow in da2.arrows:
        steps.setdefault(arrow.source, []).append(arrow)

    arrows = []
    for x1, x2 in generators:
        for output, y1, c in da1.action(x1, ()):
            arrows.append(DAArrow((x1, x2), (), output, (y1, x2), c))
        # (current x2, outputs so far, inputs so far, scalar)
        stack = [(x2, (), (), ONE)]
        while stack:
            current, outputs, inputs, scalar = stack.pop()
            for step in steps.get(current, []):
                total = scalar * step.scalar
                consumed = inputs + step.inputs
                if middle.is_idempotent(step.output):
                    if not outputs:
                        arrows.append(
                            DAArrow(
                                (x1, x2),
                                consumed,
                                outer.idempotent(da1.left_idempotent(x1)),
                                (x1, step.target),
                                total,
                            )
                        )
                    continue
                produced = outputs + (step.output,)
                if not da1.extends(x1, produced):
                    continue
                for output, y1, c in da1.action(x1, produced):
                    arrows.append(
                        DAArrow((x1, x2), consumed, output, (y1, step.target), c * total)
                    )
                stack.append((step.target, produced, consumed, total))
    result = TypeDA(
        outer,
        da2.right_algebra,
        generators,
        arrows,
        merge_coefficients(da1.coefficients, da2.coefficients),
        f"{da1.name}*{da2.name}" if da1.name and da2.name else None,
    )
    logger.debug(f"box tensor {result!r}")
    return result


def box_tensor_ad(
    a: TypeA, d: TypeD, cap: int = constants.DEFAULT_ITERATION_CAP
) -> ChainComplex:
    """The chain complex M (box) N of a right A-module M and a type D structure N."""
    if a.algebra != d.algebra:
        raise InterfaceError(f"Cannot pair {a!r} with {d!r}: the algebras do not match")
    _check_cap(a.max_arity, cap, repr(a))
    basis = [
        (x, y)
        for x in a.generators
        for y in d.generators
        if a.idempotent(x) == d.idempotent(y)
    ]
    differential: dict = {}
    for x, y in basis:
        for x2, c in a.action(x, ()):
            accumulate(differential, ((x, y), (x2, y)), c)
        for labels, y2, scalar, unit in _chains(d, y, lambda s: a.extends(x, s)):
            if unit:
                accumulate(differential, ((x, y), (x, y2)), scalar)
                continue
            for x2, c in a.action(x, labels):
                accumulate(differential, ((x, y), (x2, y2)), c * scalar)
    complex_ = ChainComplex(
        basis, differential, merge_coefficients(a.coefficients, d.coefficients)
    )
    logger.debug(f"box tensor complex of dimension {len(basis)}")
    return complex_


def induct(f: AlgebraMap, d: TypeD) -> TypeD:
    """
    Extension of scalars f_*: a type D structure over f.source becomes one over f.target.

    The same as [f] (box) d, computed by pushing every label through f:
    generators whose idempotent f kills disappear, the rest keep their names.
    """
    if f.source != d.algebra:
        raise InterfaceError(f"Cannot induct {d!r} along {f.name}: the algebras do not match")
    generators = {}
    for y, key in d.generators.items():
        image = f.on_idempotent(key)
        if image is not None:
            generators[y] = image
    arrows = [
        Arrow(arrow.source, term, arrow.target, arrow.scalar)
        for arrow in d.arrows
        if arrow.source in generators and arrow.target in generators
        for term in f(arrow.label)
    ]
    result = TypeD(
        f.target,
        generators,
        arrows,
        d.coefficients,
        f"{f.name}_*({d.name})" if d.name else None,
    )
    logger.debug(f"induced {result!r}")
    return result

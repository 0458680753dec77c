"""Type DA bimodules: a type D side over one algebra, an A-infinity side over another."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Optional

from borderedsuture.coeff import LaurentPolynomial
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import Algebra, AlgebraMap
from borderedsuture.structures.typed import (
    COEFFICIENTS,
    F2,
    FRAC,
    ONE,
    accumulate,
    generator_label,
)

logger = logging.getLogger("borderedsuture")


@dataclass(frozen=True)
class DAArrow:
    """One term scalar * (output (x) target) of delta^1_{1+j}(source, inputs)."""

    source: Hashable
    inputs: tuple
    output: Hashable
    target: Hashable
    scalar: LaurentPolynomial = field(default=ONE)


class TypeDA:
    """
    A type DA bimodule  ^{left} M _{right}.

    Generators carry a pair (left idempotent, right idempotent). Stored
    arrows never take idempotent inputs: the bimodule is strictly unital, with
    delta^1_2(x, iota) = iota_L(x) (x) x when iota is the right idempotent of
    x, and every other action with an idempotent input vanishing.
    """

    def __init__(
        self,
        left_algebra: Algebra,
        right_algebra: Algebra,
        generators: Mapping[Hashable, tuple],
        arrows: Iterable[DAArrow] = (),
        coefficients: str = F2,
        name: Optional[str] = None,
    ):
        if coefficients not in COEFFICIENTS:
            raise InterfaceError(f"Unknown coefficients '{coefficients}'")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.generators: dict = {x: tuple(i) for x, i in generators.items()}
        self.coefficients = coefficients
        self.name = name
        self._arrows: dict = {}
        for arrow in arrows:
            if arrow.source not in self.generators or arrow.target not in self.generators:
                raise InterfaceError(
                    f"Arrow {generator_label(arrow.source)} -> "
                    f"{generator_label(arrow.target)} refers to an unknown generator"
                )
            inputs = tuple(arrow.inputs)
            if any(right_algebra.is_idempotent(a) for a in inputs):
                raise InterfaceError("Type DA arrows are strictly unital; idempotent inputs are implicit")
            accumulate(
                self._arrows, (arrow.source, inputs, arrow.output, arrow.target), arrow.scalar
            )

    def __repr__(self) -> str:
        return (
            f"TypeDA({self.name or 'unnamed'}, {len(self.generators)} generators, "
            f"{len(self._arrows)} arrows, max arity {self.max_arity})"
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TypeDA)
            and self.left_algebra == other.left_algebra
            and self.right_algebra == other.right_algebra
            and self.coefficients == other.coefficients
            and self.generators == other.generators
            and self._arrows == other._arrows
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def arrows(self) -> list[DAArrow]:
        return [DAArrow(s, i, o, t, c) for (s, i, o, t), c in self._arrows.items()]

    @cached_property
    def max_arity(self) -> int:
        """Largest number of algebra inputs on a stored arrow (the unit has one)."""
        return max((len(i) for _, i, _, _ in self._arrows), default=1)

    @cached_property
    def _actions(self) -> dict:
        table: dict = {}
        for (s, i, o, t), c in self._arrows.items():
            table.setdefault((s, i), []).append((o, t, c))
        return table

    @cached_property
    def _prefixes(self) -> set:
        prefixes = set()
        for s, i, _, _ in self._arrows:
            for k in range(len(i) + 1):
                prefixes.add((s, i[:k]))
        return prefixes

    def extends(self, x, inputs: tuple) -> bool:
        """Whether some stored action of x starts with these inputs."""
        return (x, inputs) in self._prefixes

    def left_idempotent(self, x):
        return self.generators[x][0]

    def right_idempotent(self, x):
        return self.generators[x][1]

    def action(self, x, inputs: tuple) -> list[tuple]:
        """delta^1_{1+j}(x, inputs) as a list of (output, target, scalar)."""
        inputs = tuple(inputs)
        if len(inputs) == 1 and self.right_algebra.is_idempotent(inputs[0]):
            if self.right_algebra.left_idempotent(inputs[0]) != self.right_idempotent(x):
                return []
            return [(self.left_algebra.idempotent(self.left_idempotent(x)), x, ONE)]
        if any(self.right_algebra.is_idempotent(a) for a in inputs):
            return []
        return self._actions.get((x, inputs), [])

    def outgoing(self, x) -> list[DAArrow]:
        return [a for a in self.arrows if a.source == x]

    def idempotent_counts(self) -> Counter:
        return Counter(self.generators.values())

    def renamed(self, rename: Callable[[Hashable], Hashable]) -> "TypeDA":
        names = {x: rename(x) for x in self.generators}
        if len(set(names.values())) != len(names):
            raise InterfaceError("Renaming would identify two generators")
        return TypeDA(
            self.left_algebra,
            self.right_algebra,
            {names[x]: i for x, i in self.generators.items()},
            [
                DAArrow(names[a.source], a.inputs, a.output, names[a.target], a.scalar)
                for a in self.arrows
            ],
            self.coefficients,
            self.name,
        )


def hom_bimodule(
    f: AlgebraMap,
    weight: Optional[Callable[[Hashable], LaurentPolynomial]] = None,
    name: Optional[str] = None,
) -> TypeDA:
    """
    The rank-1 DA bimodule [f] of an algebra map f: B -> A.

    One generator per idempotent I of B not killed by f, with idempotents
    (f(I), I). The only actions are delta^1_2(I, b) = f(b) (x) J for I b J = b,
    each term weighted by weight(b) when given (coefficients Frac).
    """
    source, target = f.source, f.target
    generators = {}
    for key in source.idempotents():
        image = f.on_idempotent(key)
        if image is not None:
            generators[key] = (image, key)
    arrows = []
    for b in source.non_idempotent_basis():
        start, end = source.left_idempotent(b), source.right_idempotent(b)
        if start not in generators or end not in generators:
            continue
        scalar = weight(b) if weight is not None else ONE
        if not scalar:
            continue
        for term in f(b):
            arrows.append(DAArrow(start, (b,), term, end, scalar))
    module = TypeDA(
        target,
        source,
        generators,
        arrows,
        FRAC if weight is not None else F2,
        name or f"[{f.name}]",
    )
    logger.debug(f"rank-1 bimodule {module!r}")
    return module


def identity_da(algebra: Algebra) -> TypeDA:
    """The identity DA bimodule, the unit of the box tensor product."""
    return hom_bimodule(AlgebraMap.identity(algebra), name="identity")

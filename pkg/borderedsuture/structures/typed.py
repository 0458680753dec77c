"""Type D structures (twisted complexes) and type DD structures.

A type DD structure is a type D structure over the tensor product of two
strands algebras, so both share the TypeD class.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Optional

from borderedsuture.coeff import LaurentPolynomial
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import Algebra, Strands, TensorAlgebra

logger = logging.getLogger("borderedsuture")

F2 = "F2"
FRAC = "Frac"
COEFFICIENTS = (F2, FRAC)

ONE = LaurentPolynomial.one()
ZERO = LaurentPolynomial.zero()


def accumulate(table: dict, key, scalar: LaurentPolynomial) -> None:
    """table[key] += scalar over F2, dropping entries that cancel."""
    total = table.get(key, ZERO) + scalar
    if total:
        table[key] = total
    else:
        table.pop(key, None)


def merge_coefficients(*coefficients: str) -> str:
    return FRAC if FRAC in coefficients else F2


def generator_label(name: Hashable) -> str:
    """Printable name of a generator; computed generators are nested tuples."""
    if isinstance(name, str):
        return name
    if isinstance(name, Strands):
        return str(name)
    if isinstance(name, frozenset):
        return "I{" + ",".join(str(p) for p in sorted(name)) + "}"
    if isinstance(name, tuple):
        parts = []
        for part in name:
            text = generator_label(part)
            parts.append(f"({text})" if isinstance(part, tuple) else text)
        return "|".join(parts)
    return str(name)


@dataclass(frozen=True)
class Arrow:
    """One term scalar * (label (x) target) of delta^1(source)."""

    source: Hashable
    label: Hashable
    target: Hashable
    scalar: LaurentPolynomial = field(default=ONE)


class TypeD:
    """
    A type D structure over a strands algebra (or a tensor of two, for DD).

    The idempotent of a generator x is the left idempotent of every label
    leaving x. Arrows are summed over F2 on construction, so duplicate terms
    cancel.
    """

    def __init__(
        self,
        algebra: Algebra,
        generators: Mapping[Hashable, Hashable],
        arrows: Iterable[Arrow] = (),
        coefficients: str = F2,
        name: Optional[str] = None,
    ):
        if coefficients not in COEFFICIENTS:
            raise InterfaceError(f"Unknown coefficients '{coefficients}'")
        self.algebra = algebra
        self.generators: dict = dict(generators)
        self.coefficients = coefficients
        self.name = name
        self._arrows: dict = {}
        for arrow in arrows:
            if arrow.source not in self.generators or arrow.target not in self.generators:
                raise InterfaceError(
                    f"Arrow {generator_label(arrow.source)} -> "
                    f"{generator_label(arrow.target)} refers to an unknown generator"
                )
            accumulate(
                self._arrows, (arrow.source, arrow.label, arrow.target), arrow.scalar
            )

    def __repr__(self) -> str:
        return (
            f"TypeD({self.name or 'unnamed'}, {len(self.generators)} generators, "
            f"{len(self._arrows)} arrows)"
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TypeD)
            and self.algebra == other.algebra
            and self.coefficients == other.coefficients
            and self.generators == other.generators
            and self._arrows == other._arrows
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def is_dd(self) -> bool:
        return isinstance(self.algebra, TensorAlgebra)

    @property
    def arrows(self) -> list[Arrow]:
        return [Arrow(s, a, t, c) for (s, a, t), c in self._arrows.items()]

    @cached_property
    def _outgoing(self) -> dict:
        table: dict = {x: [] for x in self.generators}
        for arrow in self.arrows:
            table[arrow.source].append(arrow)
        return table

    @cached_property
    def _incoming(self) -> dict:
        table: dict = {x: [] for x in self.generators}
        for arrow in self.arrows:
            table[arrow.target].append(arrow)
        return table

    def outgoing(self, x) -> list[Arrow]:
        return self._outgoing[x]

    def incoming(self, y) -> list[Arrow]:
        return self._incoming[y]

    def idempotent(self, x):
        return self.generators[x]

    def idempotent_counts(self) -> Counter:
        return Counter(self.generators.values())

    def renamed(self, rename: Callable[[Hashable], Hashable]) -> "TypeD":
        names = {x: rename(x) for x in self.generators}
        if len(set(names.values())) != len(names):
            raise InterfaceError("Renaming would identify two generators")
        return TypeD(
            self.algebra,
            {names[x]: i for x, i in self.generators.items()},
            [Arrow(names[a.source], a.label, names[a.target], a.scalar) for a in self.arrows],
            self.coefficients,
            self.name,
        )

    def with_algebra(self, algebra: Algebra) -> "TypeD":
        """The same data over an identified algebra (same shape)."""
        if algebra != self.algebra:
            raise InterfaceError("Algebras of differently shaped diagrams are not identified")
        return TypeD(algebra, self.generators, self.arrows, self.coefficients, self.name)


def canonical(d: TypeD) -> TypeD:
    """Rename every generator to its printable label."""
    return d.renamed(generator_label)


def dual(d: TypeD) -> TypeD:
    """
    The dual structure over the opposite algebra.

    x -> a (x) y becomes y -> op(a) (x) x.
    """
    algebra = d.algebra
    return TypeD(
        algebra.opposite(),
        d.generators,
        [Arrow(a.target, algebra.op(a.label), a.source, a.scalar) for a in d.arrows],
        d.coefficients,
        f"dual({d.name})" if d.name else None,
    )


def tensor_product(d1: TypeD, d2: TypeD) -> TypeD:
    """D1 (x) D2 over A1 (x) A2, the structure of a disconnected diagram."""
    a1, a2 = d1.algebra, d2.algebra
    generators = {
        (x1, x2): (i1, i2)
        for x1, i1 in d1.generators.items()
        for x2, i2 in d2.generators.items()
    }
    arrows = []
    for x1, x2 in generators:
        for arrow in d1.outgoing(x1):
            label = (arrow.label, a2.idempotent(d2.idempotent(x2)))
            arrows.append(Arrow((x1, x2), label, (arrow.target, x2), arrow.scalar))
        for arrow in d2.outgoing(x2):
            label = (a1.idempotent(d1.idempotent(x1)), arrow.label)
            arrows.append(Arrow((x1, x2), label, (x1, arrow.target), arrow.scalar))
    return TypeD(
        TensorAlgebra(a1, a2),
        generators,
        arrows,
        merge_coefficients(d1.coefficients, d2.coefficients),
    )


def transpose(dd: TypeD) -> TypeD:
    """Swap the two algebra factors of a type DD structure."""
    if not dd.is_dd:
        raise InterfaceError("Only type DD structures can be transposed")
    algebra = dd.algebra
    return TypeD(
        TensorAlgebra(algebra.right, algebra.left),
        {x: (i[1], i[0]) for x, i in dd.generators.items()},
        [
            Arrow(a.source, (a.label[1], a.label[0]), a.target, a.scalar)
            for a in dd.arrows
        ],
        dd.coefficients,
        dd.name,
    )


def isomorphic(d1: TypeD, d2: TypeD, limit: int = 100000) -> bool:
    """
    Whether some idempotent-preserving bijection of generators carries d1 to d2.

    Brute force over bijections within each idempotent class; meant for the
    small modules compared in tests and template checks.
    """
    from itertools import permutations, product

    if d1.algebra != d2.algebra or d1.idempotent_counts() != d2.idempotent_counts():
        return False
    if len(d1._arrows) != len(d2._arrows):
        return False
    classes1: dict = {}
    classes2: dict = {}
    for x, i in d1.generators.items():
        classes1.setdefault(i, []).append(x)
    for x, i in d2.generators.items():
        classes2.setdefault(i, []).append(x)
    keys = list(classes1)
    choices = [permutations(classes2[k]) for k in keys]
    target = d2._arrows
    for count, images in enumerate(product(*choices)):
        if count >= limit:
            logger.debug(f"isomorphism search stopped after {limit} bijections")
            return False
        mapping = {
            x: y for k, image in zip(keys, images) for x, y in zip(classes1[k], image)
        }
        mapped = {(mapping[s], a, mapping[t]): c for (s, a, t), c in d1._arrows.items()}
        if mapped == target:
            return True
    return False

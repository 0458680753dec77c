"""Right A-infinity modules and strict dg bimodules."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional

from borderedsuture.coeff import LaurentPolynomial
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import Algebra, AlgebraMap
from borderedsuture.structures.typed import (
    COEFFICIENTS,
    F2,
    ONE,
    TypeD,
    accumulate,
    generator_label,
)

logger = logging.getLogger("borderedsuture")


@dataclass(frozen=True)
class AAction:
    """One term scalar * target of m_{1+j}(source, inputs)."""

    source: Hashable
    inputs: tuple
    target: Hashable
    scalar: LaurentPolynomial = field(default=ONE)


class TypeA:
    """
    A strictly unital right A-infinity module over a strands algebra.

    Actions are stored sparsely by arity; m_2(x, iota(x)) = x is implicit and
    stored actions never take idempotent inputs.
    """

    def __init__(
        self,
        algebra: Algebra,
        generators: Mapping[Hashable, Hashable],
        actions: Iterable[AAction] = (),
        coefficients: str = F2,
        name: Optional[str] = None,
    ):
        if coefficients not in COEFFICIENTS:
            raise InterfaceError(f"Unknown coefficients '{coefficients}'")
        self.algebra = algebra
        self.generators: dict = dict(generators)
        self.coefficients = coefficients
        self.name = name
        self._actions: dict = {}
        for action in actions:
            if action.source not in self.generators or action.target not in self.generators:
                raise InterfaceError(
                    f"Action {generator_label(action.source)} -> "
                    f"{generator_label(action.target)} refers to an unknown generator"
                )
            inputs = tuple(action.inputs)
            if any(algebra.is_idempotent(a) for a in inputs):
                raise InterfaceError("Type A actions are strictly unital; idempotent inputs are implicit")
            accumulate(self._actions, (action.source, inputs, action.target), action.scalar)

    def __repr__(self) -> str:
        return (
            f"TypeA({self.name or 'unnamed'}, {len(self.generators)} generators, "
            f"{len(self._actions)} actions)"
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TypeA)
            and self.algebra == other.algebra
            and self.coefficients == other.coefficients
            and self.generators == other.generators
            and self._actions == other._actions
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def actions(self) -> list[AAction]:
        return [AAction(s, i, t, c) for (s, i, t), c in self._actions.items()]

    @cached_property
    def max_arity(self) -> int:
        return max((len(i) for _, i, _ in self._actions), default=1)

    @cached_property
    def _table(self) -> dict:
        table: dict = {}
        for (s, i, t), c in self._actions.items():
            table.setdefault((s, i), []).append((t, c))
        return table

    @cached_property
    def _prefixes(self) -> set:
        prefixes = set()
        for s, i, _ in self._actions:
            for k in range(len(i) + 1):
                prefixes.add((s, i[:k]))
        return prefixes

    def extends(self, x, inputs: tuple) -> bool:
        return (x, inputs) in self._prefixes

    def idempotent(self, x):
        return self.generators[x]

    def idempotent_counts(self) -> Counter:
        return Counter(self.generators.values())

    def action(self, x, inputs: tuple) -> list[tuple]:
        """m_{1+j}(x, inputs) as a list of (target, scalar)."""
        inputs = tuple(inputs)
        if len(inputs) == 1 and self.algebra.is_idempotent(inputs[0]):
            if self.algebra.left_idempotent(inputs[0]) != self.idempotent(x):
                return []
            return [(x, ONE)]
        if any(self.algebra.is_idempotent(a) for a in inputs):
            return []
        return self._table.get((x, inputs), [])


class TypeAA:
    """
    A strict dg bimodule over (left, right): only the differential and the two
    single-element actions are nonzero. Generators carry (left, right)
    idempotents; the actions are given by callables returning
    {generator: scalar} dictionaries.
    """

    def __init__(
        self,
        left_algebra: Algebra,
        right_algebra: Algebra,
        generators: Mapping[Hashable, tuple],
        differential,
        left_action,
        right_action,
        name: Optional[str] = None,
    ):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.generators: dict = {x: tuple(i) for x, i in generators.items()}
        self.differential = differential
        self.left_action = left_action
        self.right_action = right_action
        self.name = name

    def __repr__(self) -> str:
        return f"TypeAA({self.name or 'unnamed'}, {len(self.generators)} generators)"

    def __len__(self) -> int:
        return len(self.generators)

    def right_module(self) -> TypeA:
        """Forget the left action: the underlying right A-module."""
        algebra = self.right_algebra
        actions = []
        for x in self.generators:
            for y, c in self.differential(x).items():
                actions.append(AAction(x, (), y, c))
            for a in algebra.non_idempotent_basis():
                if algebra.left_idempotent(a) != self.generators[x][1]:
                    continue
                for y, c in self.right_action(x, a).items():
                    actions.append(AAction(x, (a,), y, c))
        return TypeA(
            algebra,
            {x: i[1] for x, i in self.generators.items()},
            actions,
            name=f"{self.name}_right" if self.name else None,
        )


def to_type_a(p: TypeD) -> TypeA:
    """
    The right module Mor(P, A) of morphisms from P into the algebra.

    Generators are pairs (p, a) with a leaving the idempotent of p. Pairing
    it with Q recovers the morphism complex Mor(P, Q).
    """
    algebra = p.algebra
    generators = {}
    for x, key in p.generators.items():
        for a in algebra.basis():
            if algebra.left_idempotent(a) == key:
                generators[(x, a)] = algebra.right_idempotent(a)
    actions = []
    for x, a in generators:
        for term in algebra.differential(a):
            actions.append(AAction((x, a), (), (x, term)))
        for arrow in p.incoming(x):
            for term in algebra.multiply(arrow.label, a):
                actions.append(AAction((x, a), (), (arrow.source, term), arrow.scalar))
        for c in algebra.non_idempotent_basis():
            if algebra.left_idempotent(c) != algebra.right_idempotent(a):
                continue
            for term in algebra.multiply(a, c):
                actions.append(AAction((x, a), (c,), (x, term)))
    return TypeA(algebra, generators, actions, p.coefficients, f"Mor({p.name}, A)")


def mor_into(p: TypeD, m: TypeAA) -> TypeA:
    """
    The right module Mor(P, M) for a strict bimodule M over (A, B).

    P is a type D structure over A. Generators are pairs (p, y) with the left
    idempotent of y that of p; the result is a right B-module. With M the
    algebra over itself this is to_type_a(P).

    Raises:
        InterfaceError: if P is not over the left algebra of M.
    """
    if p.algebra != m.left_algebra:
        raise InterfaceError(f"{p!r} is not over the left algebra of {m!r}")
    algebra = m.right_algebra
    generators = {}
    for x, key in p.generators.items():
        for y, (left, right) in m.generators.items():
            if left == key:
                generators[(x, y)] = right
    actions = []
    for x, y in generators:
        for target, c in m.differential(y).items():
            actions.append(AAction((x, y), (), (x, target), c))
        for arrow in p.incoming(x):
            for target, c in m.left_action(arrow.label, y).items():
                actions.append(AAction((x, y), (), (arrow.source, target), arrow.scalar * c))
        for a in algebra.non_idempotent_basis():
            if algebra.left_idempotent(a) != generators[(x, y)]:
                continue
            for target, c in m.right_action(y, a).items():
                actions.append(AAction((x, y), (a,), (x, target), c))
    return TypeA(algebra, generators, actions, p.coefficients, f"Mor({p.name}, {m.name})")


def _sequences(algebra: Algebra, start, length: int) -> Iterable[tuple]:
    """Composable sequences of non-idempotent basis elements starting at idempotent start."""
    if length == 0:
        yield ()
        return
    for a in algebra.non_idempotent_basis():
        if algebra.left_idempotent(a) != start:
            continue
        for rest in _sequences(algebra, algebra.right_idempotent(a), length - 1):
            yield (a,) + rest


def _expand(f: AlgebraMap, inputs: tuple) -> list[tuple]:
    """f(a1) (x) ... (x) f(aj) expanded into basis sequences."""
    sequences: list[tuple] = [()]
    for a in inputs:
        sequences = [s + (term,) for s in sequences for term in f(a)]
    return sequences


def restrict(f: AlgebraMap, m: TypeA) -> TypeA:
    """
    Restriction of scalars f^*: a right module over f.target becomes one over f.source.

    Raises:
        InterfaceError: if f is not injective on the idempotents it does not kill.
    """
    if f.target != m.algebra:
        raise InterfaceError("Restriction needs the module over the map's target algebra")
    source = f.source
    back: dict = {}
    for key in source.idempotents():
        image = f.on_idempotent(key)
        if image is None:
            continue
        if image in back:
            raise InterfaceError(f"{f.name} is not injective on idempotents")
        back[image] = key
    generators = {x: back[i] for x, i in m.generators.items() if i in back}
    actions = []
    for x, key in generators.items():
        for length in range(m.max_arity + 1):
            for inputs in _sequences(source, key, length):
                totals: dict = {}
                for image in _expand(f, inputs):
                    for y, c in m.action(x, image):
                        accumulate(totals, y, c)
                for y, c in totals.items():
                    if y in generators:
                        actions.append(AAction(x, inputs, y, c))
    return TypeA(source, generators, actions, m.coefficients, f"{f.name}^*({m.name})")

"""Strands algebras of arc diagrams and their tensor products.

Elements are F2-linear combinations of basis elements, represented as
frozensets of basis keys. Idempotents are keyed by the frozenset of matched
pair indices they occupy.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Any, Hashable, Iterable, Iterator

from borderedsuture import constants
from borderedsuture.arcdiagram import ArcDiagram, Chord, reverse
from borderedsuture.errors import InterfaceError, SchemaError
from borderedsuture.strandalg import strands as big

logger = logging.getLogger("borderedsuture")

Element = frozenset


def add(*elements: Iterable) -> frozenset:
    """Sum over F2: terms appearing an even number of times cancel."""
    total: set = set()
    for element in elements:
        for term in element:
            total ^= {term}
    return frozenset(total)


@dataclass(frozen=True, order=True)
class Strands:
    """
    A basis element of A(Z): moving strands plus horizontal matched pairs.

    Stands for the sum, over all ways of choosing one point of each
    horizontal pair, of the corresponding big-algebra section.
    """

    moving: tuple[tuple[int, int], ...] = ()
    horizontal: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moving", tuple(sorted(tuple(m) for m in self.moving)))
        object.__setattr__(self, "horizontal", tuple(sorted(self.horizontal)))

    def is_idempotent(self) -> bool:
        return not self.moving

    def __str__(self) -> str:
        parts = [f"{s}->{t}" for s, t in self.moving]
        parts += [f"h{p}" for p in self.horizontal]
        return "[" + " ".join(parts) + "]"


class Algebra(ABC):
    """Interface shared by strands algebras and their tensor products."""

    @abstractmethod
    def basis(self) -> list: ...

    @abstractmethod
    def multiply(self, x, y) -> frozenset: ...

    @abstractmethod
    def differential(self, x) -> frozenset: ...

    @abstractmethod
    def left_idempotent(self, x) -> Hashable: ...

    @abstractmethod
    def right_idempotent(self, x) -> Hashable: ...

    @abstractmethod
    def idempotent(self, key) -> Any: ...

    @abstractmethod
    def idempotents(self) -> list: ...

    @abstractmethod
    def is_idempotent(self, x) -> bool: ...

    @abstractmethod
    def opposite(self) -> "Algebra": ...

    @abstractmethod
    def op(self, x): ...

    @abstractmethod
    def label_to_json(self, x) -> Any: ...

    @abstractmethod
    def label_from_json(self, data) -> Any: ...

    @abstractmethod
    def idempotent_to_json(self, key) -> Any: ...

    @abstractmethod
    def idempotent_from_json(self, data) -> Hashable: ...

    def multiply_elements(self, xs: Iterable, ys: Iterable) -> frozenset:
        return add(*(self.multiply(x, y) for x in xs for y in ys))

    def differential_element(self, xs: Iterable) -> frozenset:
        return add(*(self.differential(x) for x in xs))

    @cached_property
    def _by_idempotents(self) -> dict:
        table: dict = {}
        for x in self.basis():
            table.setdefault(
                (self.left_idempotent(x), self.right_idempotent(x)), []
            ).append(x)
        return table

    def basis_between(self, left, right) -> list:
        """Basis elements a with I(left) a I(right) = a."""
        return self._by_idempotents.get((left, right), [])

    def non_idempotent_basis(self) -> list:
        return [x for x in self.basis() if not self.is_idempotent(x)]


class StrandAlgebra(Algebra):
    """
    The strands algebra A(Z) of an arc diagram (all strand numbers).

    Pointed matched circles are cut open at the basepoint, so their
    algebra is the same as that of the one-interval arc diagram.
    """

    def __init__(self, z: ArcDiagram):
        self.z = z
        self.multiply = lru_cache(maxsize=constants.PRODUCT_CACHE_SIZE)(self._multiply)
        self.differential = lru_cache(maxsize=constants.PRODUCT_CACHE_SIZE)(
            self._differential
        )

    # Concrete overrides for the ABC; shadowed per instance by the caches above.
    def multiply(self, x: Strands, y: Strands) -> frozenset:
        return self._multiply(x, y)

    def differential(self, x: Strands) -> frozenset:
        return self._differential(x)

    @cached_property
    def shape(self) -> tuple:
        return (
            tuple(last - first for first, last in self.z.linear_intervals),
            self.z.pairs,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, StrandAlgebra) and self.shape == other.shape

    def __hash__(self) -> int:
        return hash(("strands", self.shape))

    def __repr__(self) -> str:
        return f"StrandAlgebra({self.z})"

    # structure

    def pair_of(self, pos: int) -> int:
        return self.z.pair_of[pos]

    def is_basis(self, x: Strands) -> bool:
        z = self.z
        seen_starts, seen_ends = set(), set()
        for s, t in x.moving:
            if s not in z.pair_of or t not in z.pair_of:
                return False
            if not s < t or not z.same_interval(s, t):
                return False
            if z.pair_of[s] in seen_starts or z.pair_of[t] in seen_ends:
                return False
            seen_starts.add(z.pair_of[s])
            seen_ends.add(z.pair_of[t])
        if len({s for s, _ in x.moving}) != len(x.moving):
            return False
        if len({t for _, t in x.moving}) != len(x.moving):
            return False
        for h in x.horizontal:
            if not 0 <= h < z.n_pairs or h in seen_starts or h in seen_ends:
                return False
        return len(set(x.horizontal)) == len(x.horizontal)

    @cached_property
    def _moving_sets(self) -> list[tuple[tuple[int, int], ...]]:
        z = self.z
        results: list[tuple[tuple[int, int], ...]] = []

        def extend(pos, chosen, start_pairs, end_points, end_pairs):
            if pos == z.n_points:
                results.append(tuple(chosen))
                return
            extend(pos + 1, chosen, start_pairs, end_points, end_pairs)
            pair = z.pair_of[pos]
            if pair in start_pairs:
                return
            last = z.linear_intervals[z.interval_of[pos]][1]
            for t in range(pos + 1, last + 1):
                if t in end_points or z.pair_of[t] in end_pairs:
                    continue
                chosen.append((pos, t))
                extend(
                    pos + 1,
                    chosen,
                    start_pairs | {pair},
                    end_points | {t},
                    end_pairs | {z.pair_of[t]},
                )
                chosen.pop()

        extend(0, [], frozenset(), frozenset(), frozenset())
        return results

    @cached_property
    def _basis(self) -> list[Strands]:
        elements = []
        pairs = range(self.z.n_pairs)
        for moving in self._moving_sets:
            used = {self.z.pair_of[s] for s, _ in moving} | {
                self.z.pair_of[t] for _, t in moving
            }
            free = [p for p in pairs if p not in used]
            for size in range(len(free) + 1):
                for horizontal in combinations(free, size):
                    elements.append(Strands(moving, horizontal))
        elements.sort(key=lambda x: (len(x.moving) + len(x.horizontal), x))
        logger.debug(f"strands algebra on {self.z.n_points} points: dim {len(elements)}")
        return elements

    def basis(self) -> list[Strands]:
        return self._basis

    def summand(self, k: int) -> list[Strands]:
        """Basis elements with k occupied pairs (k strands, counting horizontal pairs)."""
        return [x for x in self._basis if len(x.moving) + len(x.horizontal) == k]

    def left_idempotent(self, x: Strands) -> frozenset[int]:
        return frozenset(self.z.pair_of[s] for s, _ in x.moving) | frozenset(
            x.horizontal
        )

    def right_idempotent(self, x: Strands) -> frozenset[int]:
        return frozenset(self.z.pair_of[t] for _, t in x.moving) | frozenset(
            x.horizontal
        )

    def idempotent(self, key: Iterable[int]) -> Strands:
        return Strands((), tuple(key))

    def idempotents(self) -> list[frozenset[int]]:
        pairs = range(self.z.n_pairs)
        return [
            frozenset(c) for size in range(len(pairs) + 1) for c in combinations(pairs, size)
        ]

    def is_idempotent(self, x: Strands) -> bool:
        return x.is_idempotent()

    def unit(self) -> frozenset:
        return frozenset(self.idempotent(key) for key in self.idempotents())

    # sections in the big algebra

    def sections(self, x: Strands) -> Iterator[big.Section]:
        choices = [self.z.pairs[h] for h in x.horizontal]
        for dots in product(*choices):
            yield big.make_section(list(x.moving) + [(d, d) for d in dots])

    def _canonical(self, terms: Iterable[big.Section]) -> frozenset:
        """Read off A(Z) basis elements from a big-algebra sum via lowest-point sections."""
        result = set()
        for section in terms:
            moving = tuple((s, t) for s, t in section if s != t)
            dots = [s for s, t in section if s == t]
            if all(self.z.pairs[self.z.pair_of[d]][0] == d for d in dots):
                result.add(Strands(moving, tuple(self.z.pair_of[d] for d in dots)))
        return frozenset(result)

    def _multiply(self, x: Strands, y: Strands) -> frozenset:
        result: frozenset = frozenset()
        if self.right_idempotent(x) == self.left_idempotent(y):
            y_starts = {s for s, _ in y.moving}
            terms: set = set()
            for first in self.sections(x):
                available = big.ends(first)
                if not y_starts <= available:
                    continue
                rest = available - y_starts
                dots = []
                for h in y.horizontal:
                    hit = [p for p in self.z.pairs[h] if p in rest]
                    if len(hit) != 1:
                        break
                    dots.append(hit[0])
                else:
                    if len(dots) != len(rest):
                        continue
                    second = big.make_section(list(y.moving) + [(d, d) for d in dots])
                    composite = big.compose(first, second)
                    if composite is not None:
                        terms ^= {composite}
            result = self._canonical(terms)
        return result

    def _differential(self, x: Strands) -> frozenset:
        terms: set = set()
        for section in self.sections(x):
            for resolved in big.differential(section):
                terms ^= {resolved}
        return self._canonical(terms)

    # chords and supports

    def chord_element(self, chord: Chord) -> frozenset:
        """a(rho): the sum of all basis elements whose only moving strand is rho."""
        z = self.z
        if (
            chord.start not in z.pair_of
            or chord.end not in z.pair_of
            or not z.same_interval(chord.start, chord.end)
        ):
            raise InterfaceError(f"{chord} is not a chord of {z}")
        used = {z.pair_of[chord.start], z.pair_of[chord.end]}
        free = [p for p in range(z.n_pairs) if p not in used]
        return frozenset(
            Strands(((chord.start, chord.end),), horizontal)
            for size in range(len(free) + 1)
            for horizontal in combinations(free, size)
        )

    def support(self, x: Strands) -> tuple[int, ...]:
        vector = [0] * self.z.n_segments
        for s, t in x.moving:
            for p in range(s, t):
                vector[self.z.segment_index[p]] += 1
        return tuple(vector)

    # opposite algebra

    @cached_property
    def _opposite(self) -> "StrandAlgebra":
        return StrandAlgebra(reverse(self.z))

    def opposite(self) -> "StrandAlgebra":
        """A(-Z), identified with A(Z)^op through op()."""
        return self._opposite

    def op(self, x: Strands) -> Strands:
        last = self.z.n_points - 1
        return Strands(tuple((last - t, last - s) for s, t in x.moving), x.horizontal)

    # serialization

    def label_to_json(self, x: Strands) -> dict:
        return {
            "moving": [list(m) for m in x.moving],
            "horizontal": list(x.horizontal),
        }

    def label_from_json(self, data) -> Strands:
        if hasattr(data, "model_dump"):
            data = data.model_dump()
        x = Strands(
            tuple(tuple(m) for m in data.get("moving", [])),
            tuple(data.get("horizontal", [])),
        )
        if not self.is_basis(x):
            raise SchemaError(f"{x} is not a strand diagram of {self.z}")
        return x

    def idempotent_to_json(self, key) -> list[int]:
        return sorted(key)

    def idempotent_from_json(self, data) -> frozenset[int]:
        key = frozenset(data)
        if not all(0 <= p < self.z.n_pairs for p in key):
            raise SchemaError(f"Idempotent {sorted(key)} refers to unknown pairs")
        return key

    def describe(self, x: Strands) -> str:
        return str(x)


class TensorAlgebra(Algebra):
    """A(Z1) (x) A(Z2) over F2; basis keys are pairs (x1, x2)."""

    def __init__(self, left: Algebra, right: Algebra):
        self.left = left
        self.right = right

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorAlgebra)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return hash(("tensor", self.left, self.right))

    def __repr__(self) -> str:
        return f"TensorAlgebra({self.left!r}, {self.right!r})"

    @cached_property
    def _basis(self) -> list:
        return [(x, y) for x in self.left.basis() for y in self.right.basis()]

    def basis(self) -> list:
        return self._basis

    def multiply(self, x, y) -> frozenset:
        lefts = self.left.multiply(x[0], y[0])
        if not lefts:
            return frozenset()
        rights = self.right.multiply(x[1], y[1])
        return frozenset((a, b) for a in lefts for b in rights)

    def differential(self, x) -> frozenset:
        return add(
            frozenset((a, x[1]) for a in self.left.differential(x[0])),
            frozenset((x[0], b) for b in self.right.differential(x[1])),
        )

    def left_idempotent(self, x):
        return (self.left.left_idempotent(x[0]), self.right.left_idempotent(x[1]))

    def right_idempotent(self, x):
        return (self.left.right_idempotent(x[0]), self.right.right_idempotent(x[1]))

    def idempotent(self, key):
        return (self.left.idempotent(key[0]), self.right.idempotent(key[1]))

    def idempotents(self) -> list:
        return [(a, b) for a in self.left.idempotents() for b in self.right.idempotents()]

    def is_idempotent(self, x) -> bool:
        return self.left.is_idempotent(x[0]) and self.right.is_idempotent(x[1])

    def opposite(self) -> "TensorAlgebra":
        return TensorAlgebra(self.left.opposite(), self.right.opposite())

    def op(self, x):
        return (self.left.op(x[0]), self.right.op(x[1]))

    def label_to_json(self, x) -> dict:
        return {
            "left": self.left.label_to_json(x[0]),
            "right": self.right.label_to_json(x[1]),
        }

    def label_from_json(self, data):
        if hasattr(data, "model_dump"):
            data = data.model_dump()
        if not isinstance(data, dict) or set(data) != {"left", "right"}:
            raise SchemaError("A tensor label needs 'left' and 'right' parts")
        return (
            self.left.label_from_json(data["left"]),
            self.right.label_from_json(data["right"]),
        )

    def idempotent_to_json(self, key) -> dict:
        return {
            "left": self.left.idempotent_to_json(key[0]),
            "right": self.right.idempotent_to_json(key[1]),
        }

    def idempotent_from_json(self, data):
        if hasattr(data, "model_dump"):
            data = data.model_dump()
        if not isinstance(data, dict) or set(data) != {"left", "right"}:
            raise SchemaError("A tensor idempotent needs 'left' and 'right' parts")
        return (
            self.left.idempotent_from_json(data["left"]),
            self.right.idempotent_from_json(data["right"]),
        )

    def describe(self, x) -> str:
        return f"{self.left.describe(x[0])}(x){self.right.describe(x[1])}"


def tensor(a1: Algebra, a2: Algebra) -> TensorAlgebra:
    return TensorAlgebra(a1, a2)


@lru_cache(maxsize=constants.ALGEBRA_CACHE_SIZE)
def strand_algebra(z: ArcDiagram) -> StrandAlgebra:
    """Shared StrandAlgebra instance per diagram, so product tables are computed once."""
    return StrandAlgebra(z)


def basis(z: ArcDiagram) -> list[Strands]:
    """
    The basis reported for a diagram.

    For a pointed matched circle of genus k this is the k-strand summand
    (the bordered algebra); for an arc diagram it is the whole algebra.
    """
    algebra = strand_algebra(z)
    if z.is_pmc:
        return algebra.summand(z.genus)
    return algebra.basis()


def relation_table(z: ArcDiagram) -> list[tuple[Strands, Strands, frozenset]]:
    """Nonzero products of non-idempotent basis elements of basis(z)."""
    algebra = strand_algebra(z)
    elements = [x for x in basis(z) if not x.is_idempotent()]
    table = []
    for x in elements:
        for y in elements:
            result = algebra.multiply(x, y)
            if result:
                table.append((x, y, result))
    return table

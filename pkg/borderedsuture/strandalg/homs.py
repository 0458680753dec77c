"""Homomorphisms between strands algebras."""

from __future__ import annotations

import logging
from typing import Callable, Iterable, Optional

from borderedsuture.arcdiagram import (
    ARC,
    ArcDiagram,
    Embedding,
    disjoint_union,
    embedding,
)
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg.algebra import (
    Algebra,
    StrandAlgebra,
    Strands,
    TensorAlgebra,
    add,
    strand_algebra,
)

logger = logging.getLogger("borderedsuture")


class AlgebraMap:
    """
    A dg-algebra map, given on basis elements.

    `fn` sends a basis element of the source to an element (frozenset of basis
    elements) of the target. Idempotents go to a single idempotent or to 0.
    """

    def __init__(
        self,
        source: Algebra,
        target: Algebra,
        fn: Callable[[object], frozenset],
        name: str = "map",
    ):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"AlgebraMap({self.name})"

    def __call__(self, x) -> frozenset:
        if x not in self._cache:
            self._cache[x] = self.fn(x)
        return self._cache[x]

    def apply(self, xs: Iterable) -> frozenset:
        return add(*(self(x) for x in xs))

    def on_idempotent(self, key):
        """Image idempotent key, or None when the idempotent is sent to 0."""
        image = self(self.source.idempotent(key))
        if not image:
            return None
        if len(image) != 1:
            raise InterfaceError(f"{self.name} does not send idempotents to idempotents")
        (element,) = image
        if not self.target.is_idempotent(element):
            raise InterfaceError(f"{self.name} does not send idempotents to idempotents")
        return self.target.left_idempotent(element)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """self after other."""
        if other.target != self.source:
            raise InterfaceError(f"Cannot compose {self.name} after {other.name}")
        return AlgebraMap(
            other.source,
            self.target,
            lambda x: self.apply(other(x)),
            f"{self.name}.{other.name}",
        )

    @classmethod
    def identity(cls, algebra: Algebra) -> "AlgebraMap":
        return cls(algebra, algebra, lambda x: frozenset({x}), "id")


def tensor_maps(f: AlgebraMap, g: AlgebraMap) -> AlgebraMap:
    """f (x) g between tensor algebras."""
    source = TensorAlgebra(f.source, g.source)
    target = TensorAlgebra(f.target, g.target)
    return AlgebraMap(
        source,
        target,
        lambda x: frozenset((a, b) for a in f(x[0]) for b in g(x[1])),
        f"{f.name}(x){g.name}",
    )


def _push(x: Strands, emb: Embedding, extra: tuple[int, ...] = ()) -> Strands:
    pairs = emb.pair_map
    return Strands(
        tuple((emb.positions[s], emb.positions[t]) for s, t in x.moving),
        tuple(pairs[h] for h in x.horizontal) + extra,
    )


def hom_inclusion(emb: Embedding) -> AlgebraMap:
    """i: A(Z) -> A(Z') for a subdiagram Z of Z'."""
    source = strand_algebra(emb.small)
    target = strand_algebra(emb.big)
    return AlgebraMap(source, target, lambda x: frozenset({_push(x, emb)}), "i")


def hom_projection(emb: Embedding) -> AlgebraMap:
    """
    p: A(Z') -> A(Z) for a full subdiagram Z of Z'.

    Strand diagrams with a strand leaving the subdiagram's intervals go to 0.
    """
    if not emb.full:
        raise InterfaceError("Projection needs a full subdiagram")
    source = strand_algebra(emb.big)
    target = strand_algebra(emb.small)
    back = emb.preimage()
    pair_back = {big: small for small, big in enumerate(emb.pair_map)}

    def project(x: Strands) -> frozenset:
        moving = []
        for s, t in x.moving:
            a, b = back[s], back[t]
            if not emb.small.same_interval(a, b):
                return frozenset()
            moving.append((a, b))
        return frozenset({Strands(tuple(moving), tuple(pair_back[h] for h in x.horizontal))})

    return AlgebraMap(source, target, project, "p")


def remove_pair(z: ArcDiagram, b: int, c: int) -> ArcDiagram:
    """z with the matched points b, c (ids) deleted; emptied intervals disappear."""
    if (b, c) not in z.matching and (c, b) not in z.matching:
        raise InterfaceError(f"Points {b} and {c} are not matched in {z}")
    intervals = tuple(
        tuple(p for p in interval if p not in (b, c)) for interval in z.linear_points
    )
    return ArcDiagram(
        ARC,
        tuple(interval for interval in intervals if interval),
        tuple(pair for pair in z.matching if set(pair) != {b, c}),
    )


def _check_terminal(z: ArcDiagram, b: int, c: int) -> None:
    for point in (b, c):
        pos = z.position.get(point)
        if pos is None:
            raise InterfaceError(f"Point {point} is not in {z}")
        first, last = z.linear_intervals[z.interval_of[pos]]
        if pos not in (first, last):
            raise InterfaceError(f"Point {point} must be an endpoint of its interval")


def hom_i_empty(z: ArcDiagram, b: int, c: int) -> AlgebraMap:
    """i_0: A(Z minus {b, c}) -> A(Z), the inclusion of the smaller diagram."""
    _check_terminal(z, b, c)
    small = remove_pair(z, b, c)
    return hom_inclusion(embedding(small, z))


def hom_i_bc(z: ArcDiagram, b: int, c: int) -> AlgebraMap:
    """
    i_bc: A(Z minus {b, c}) -> A(Z), adding a horizontal pair at b and c.

    Not unital: the image of the unit is the sum of idempotents containing the pair.
    """
    _check_terminal(z, b, c)
    small = remove_pair(z, b, c)
    emb = embedding(small, z)
    bc = z.pair_of[z.position[b]]
    source = strand_algebra(small)
    target = strand_algebra(z)
    return AlgebraMap(
        source, target, lambda x: frozenset({_push(x, emb, (bc,))}), "i_bc"
    )


def union_map(z1: ArcDiagram, z2: ArcDiagram) -> AlgebraMap:
    """A(Z1) (x) A(Z2) -> A(Z1 u Z2), juxtaposing strand diagrams."""
    z = disjoint_union(z1, z2)
    a1, a2 = strand_algebra(z1), strand_algebra(z2)
    shift, pair_shift = z1.n_points, z1.n_pairs

    def join(x) -> frozenset:
        left, right = x
        return frozenset(
            {
                Strands(
                    left.moving
                    + tuple((s + shift, t + shift) for s, t in right.moving),
                    left.horizontal + tuple(h + pair_shift for h in right.horizontal),
                )
            }
        )

    return AlgebraMap(TensorAlgebra(a1, a2), strand_algebra(z), join, "union")


def union_split(z1: ArcDiagram, z2: ArcDiagram) -> AlgebraMap:
    """Inverse of union_map."""
    z = disjoint_union(z1, z2)
    a1, a2 = strand_algebra(z1), strand_algebra(z2)
    shift, pair_shift = z1.n_points, z1.n_pairs

    def split(x: Strands) -> frozenset:
        left = Strands(
            tuple(m for m in x.moving if m[0] < shift),
            tuple(h for h in x.horizontal if h < pair_shift),
        )
        right = Strands(
            tuple((s - shift, t - shift) for s, t in x.moving if s >= shift),
            tuple(h - pair_shift for h in x.horizontal if h >= pair_shift),
        )
        return frozenset({(left, right)})

    return AlgebraMap(strand_algebra(z), TensorAlgebra(a1, a2), split, "split")


def opposite_map(algebra: StrandAlgebra) -> AlgebraMap:
    """The identification of A(-Z) with A(Z)^op as a map of underlying spaces."""
    return AlgebraMap(
        algebra.opposite(), algebra, lambda x: frozenset({algebra.opposite().op(x)}), "op"
    )


def isomorphism(source: StrandAlgebra, target: StrandAlgebra) -> AlgebraMap:
    """Identity on strand diagrams between algebras of equally shaped diagrams."""
    if source != target:
        raise InterfaceError("Algebras of differently shaped diagrams are not identified")
    return AlgebraMap(source, target, lambda x: frozenset({x}), "iso")


def is_dg_map(f: AlgebraMap, elements: Optional[list] = None) -> list[str]:
    """Diagnostics for multiplicativity and compatibility with d on basis pairs."""
    errors = []
    elements = elements if elements is not None else f.source.basis()
    for x in elements:
        if f.target.differential_element(f(x)) != f.apply(f.source.differential(x)):
            errors.append(f"{f.name} does not commute with d on {x}")
        for y in elements:
            lhs = f.apply(f.source.multiply(x, y))
            rhs = f.target.multiply_elements(f(x), f(y))
            if lhs != rhs:
                errors.append(f"{f.name} is not multiplicative on {x}, {y}")
    return errors

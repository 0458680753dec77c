"""Identity bimodules and the passage from type DD to type DA."""

from __future__ import annotations

import logging

from borderedsuture import constants
from borderedsuture.arcdiagram import ArcDiagram, reverse
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import (
    StrandAlgebra,
    Strands,
    TensorAlgebra,
    strand_algebra,
)
from borderedsuture.structures import (
    ONE,
    Arrow,
    DAArrow,
    TypeAA,
    TypeD,
    TypeDA,
    reduce,
)

logger = logging.getLogger("borderedsuture")


def dd_identity(z: ArcDiagram) -> TypeD:
    """
    The type DD identity bimodule over A(Z) (x) A(-Z).

    Generators are complementary idempotent pairs (I, J). For every chord
    u < v with pair(u) in I and pair(v) in J there is one arrow labelled by the
    chord on the A(Z) side and its mirror on the A(-Z) side.
    """
    left = strand_algebra(z)
    right = strand_algebra(reverse(z))
    pairs = frozenset(range(z.n_pairs))
    generators = {}
    for key in left.idempotents():
        generators[(key, pairs - key)] = (key, pairs - key)
    last = z.n_points - 1
    arrows = []
    for first, end in z.linear_intervals:
        for u in range(first, end + 1):
            for v in range(u + 1, end + 1):
                pu, pv = z.pair_of[u], z.pair_of[v]
                if pu == pv:
                    continue
                for i, j in generators:
                    if pu not in i or pv in i:
                        continue
                    label = (
                        Strands(((u, v),), tuple(i - {pu})),
                        Strands(((last - v, last - u),), tuple(j - {pv})),
                    )
                    target = ((i - {pu}) | {pv}, (j - {pv}) | {pu})
                    arrows.append(Arrow((i, j), label, target))
    dd = TypeD(TensorAlgebra(left, right), generators, arrows, name="DDId")
    logger.debug(f"identity DD bimodule {dd!r}")
    return dd


def aa_identity(z: ArcDiagram) -> TypeAA:
    """A(Z) as a strict dg bimodule over itself, the type AA identity."""
    algebra = strand_algebra(z)

    def differential(x) -> dict:
        return {y: ONE for y in algebra.differential(x)}

    def left_action(a, x) -> dict:
        return {y: ONE for y in algebra.multiply(a, x)}

    def right_action(x, a) -> dict:
        return {y: ONE for y in algebra.multiply(x, a)}

    generators = {
        x: (algebra.left_idempotent(x), algebra.right_idempotent(x))
        for x in algebra.basis()
    }
    return TypeAA(
        algebra, algebra, generators, differential, left_action, right_action, "AAId"
    )


def _resolution(a2: StrandAlgebra) -> TypeD:
    """
    A(Z2) boxed with the identity DD bimodule of Z2, a type D structure over
    A(-Z2) whose generators (c, x) remember a free A(Z2) element c.
    """
    identity = dd_identity(a2.z)
    b = identity.algebra.right
    generators = {}
    for x, (i, j) in identity.generators.items():
        for c in a2.basis():
            if a2.right_idempotent(c) == i:
                generators[(c, x)] = j
    arrows = []
    for c0, x0 in generators:
        for arrow in identity.outgoing(x0):
            a, b_label = arrow.label
            for c in a2.multiply(c0, a):
                arrows.append(Arrow((c0, x0), b_label, (c, arrow.target)))
        for c in a2.differential(c0):
            arrows.append(Arrow((c0, x0), b.idempotent(generators[(c0, x0)]), (c, x0)))
    return TypeD(b, generators, arrows, name="A(x)DDId")


def dd_to_da(
    dd: TypeD, cap: int = constants.DEFAULT_ITERATION_CAP, reduced: bool = True
) -> TypeDA:
    """
    The type DA bimodule of a type DD bimodule over A(Z1) (x) A(-Z2).

    Computed as the morphism complex from A(Z2) boxed with the identity DD
    bimodule into dd. Generators are triples ((c, x), b, q); the left
    A(Z2)-action on c becomes the right action of the result, so actions
    have arity at most one before the result is reduced; pass reduced=False
    to keep them that way.
    """
    if not dd.is_dd:
        raise InterfaceError("dd_to_da needs a type DD structure")
    a1, b = dd.algebra.left, dd.algebra.right
    if not isinstance(b, StrandAlgebra):
        raise InterfaceError("The right algebra of a DD bimodule must be a strands algebra")
    a2 = b.opposite()
    p = _resolution(a2)
    if p.algebra != b:
        raise InterfaceError("Resolution and DD bimodule use different algebras")

    generators = {}
    for (c, x), j in p.generators.items():
        for q, (i1, j2) in dd.generators.items():
            for label in b.basis_between(j, j2):
                generators[((c, x), label, q)] = (i1, a2.left_idempotent(c))

    arrows = []
    for f in generators:
        (c, x), label, q = f
        unit = a1.idempotent(dd.generators[q][0])
        for term in b.differential(label):
            arrows.append(DAArrow(f, (), unit, ((c, x), term, q)))
        for arrow in dd.outgoing(q):
            out, b2 = arrow.label
            for term in b.multiply(label, b2):
                arrows.append(
                    DAArrow(f, (), out, ((c, x), term, arrow.target), arrow.scalar)
                )
        for arrow in p.incoming((c, x)):
            for term in b.multiply(arrow.label, label):
                arrows.append(DAArrow(f, (), unit, (arrow.source, term, q)))
        # Right action by e: (f.e)(c'', x) = f(e c'', x).
        for e in a2.non_idempotent_basis():
            if a2.right_idempotent(e) != a2.left_idempotent(c):
                continue
            for product in a2.multiply(e, c):
                source = ((product, x), label, q)
                if source in generators:
                    arrows.append(DAArrow(source, (e,), unit, f))

    da = TypeDA(
        a1,
        a2,
        generators,
        arrows,
        dd.coefficients,
        f"DA({dd.name})" if dd.name else None,
    )
    logger.debug(f"converted DD to DA: {da!r}")
    if reduced:
        return reduce(da, cap)
    return da

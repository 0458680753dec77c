"""Type DD bimodules of the elementary bordered-sutured cobordisms.

Every piece is the identity DD bimodule of a nearby diagram, induced along
one of the inclusions i_0 (forget the pair b, c) or i_bc (add it as a
horizontal pair).
"""

from __future__ import annotations

import logging
from typing import Literal, Optional

from borderedsuture.arcdiagram import (
    ARC,
    ArcDiagram,
    disjoint_union,
    drop_pointless,
    embedding,
    pointless_intervals,
    reverse,
)
from borderedsuture.bimodlib.identity import dd_identity
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import (
    AlgebraMap,
    Strands,
    TensorAlgebra,
    hom_i_bc,
    hom_i_empty,
    hom_inclusion,
    strand_algebra,
    tensor_maps,
    union_map,
)
from borderedsuture.structures import (
    Arrow,
    TypeD,
    induct,
    tensor_product,
    transpose,
)

logger = logging.getLogger("borderedsuture")

R_PLUS = "R+"
R_MINUS = "R-"
SIGNS = (R_PLUS, R_MINUS)

CUP = "cup"
CAP = "cap"

ONE_HANDLE = "one-handle"
TWO_HANDLE = "two-handle"


def torus() -> ArcDiagram:
    """The genus-1 pointed matched circle."""
    return ArcDiagram("pmc", ((0, 1, 2, 3),), ((0, 2), (1, 3)), 3)


def solid_torus_dd() -> TypeD:
    """CFD of the infinity-framed solid torus: one generator r, delta(r) = rho2rho3 r."""
    algebra = strand_algebra(torus())
    return TypeD(
        algebra,
        {"r": frozenset({1})},
        [Arrow("r", Strands(((1, 3),)), "r")],
        name="H_inf",
    )


def _check_below_terminal(z: ArcDiagram, b: int, c: int) -> None:
    """b and c sit right below the terminal endpoints of two different intervals."""
    intervals = set()
    for point in (b, c):
        pos = z.position.get(point)
        if pos is None:
            raise InterfaceError(f"Point {point} is not in {z}")
        k = z.interval_of[pos]
        if pos != z.linear_intervals[k][1]:
            raise InterfaceError(
                f"Point {point} is not adjacent to the terminal endpoint of its interval"
            )
        intervals.add(k)
    if len(intervals) != 2:
        raise InterfaceError(f"Points {b} and {c} must lie on different intervals")


def _induce_left(i: AlgebraMap) -> TypeD:
    """(i (x) Id)_* DDId(Z') for i: A(Z') -> A(Z)."""
    identity = dd_identity(i.source.z)
    f = tensor_maps(i, AlgebraMap.identity(identity.algebra.right))
    return induct(f, identity)


def _induce_right(z: ArcDiagram, i: AlgebraMap) -> TypeD:
    """(Id (x) i)_* DDId(Z) for i: A(-Z) -> A(-Z')."""
    identity = dd_identity(z)
    if identity.algebra.right != i.source:
        raise InterfaceError(f"{i.name} does not start at A(-Z) for {z}")
    f = tensor_maps(AlgebraMap.identity(identity.algebra.left), i)
    return induct(f, identity)


def r_minus_handle_dd(z: ArcDiagram, b: int, c: int) -> TypeD:
    """
    A 1-handle attached to R_-, from A(Z) to A(Z') with Z' = Z minus {b, c}.

    b and c are matched and sit right below the terminal endpoints of two
    different intervals of Z.
    """
    _check_below_terminal(z, b, c)
    dd = _induce_left(hom_i_empty(z, b, c))
    dd.name = "R-handle"
    return dd


def r_plus_handle_dd(z: ArcDiagram, b: int, c: int) -> TypeD:
    """
    A 1-handle attached to R_+, from A(Z) to the surgered diagram Z'.

    The pair b, c becomes a horizontal pair under i_bc, so only strand
    diagrams with both points unoccupied on the Z' side survive.
    """
    _check_below_terminal(z, b, c)
    dd = _induce_left(hom_i_bc(z, b, c))
    dd.name = "R+handle"
    return dd


def cup_diagram(z: ArcDiagram, interval: int) -> tuple[ArcDiagram, int, int]:
    """
    Z' = Z with a point b added right below the terminal endpoint of the
    given interval and a new one-point interval carrying its partner c.
    """
    z = z if z.flavor == ARC else ArcDiagram(ARC, z.linear_points, z.matching)
    if not 0 <= interval < len(z.intervals):
        raise InterfaceError(f"{z} has no interval {interval}")
    b = max(z.point_ids, default=-1) + 1
    c = b + 1
    intervals = list(z.intervals)
    intervals[interval] = intervals[interval] + (b,)
    return (
        ArcDiagram(ARC, tuple(intervals) + ((c,),), z.matching + ((b, c),)),
        b,
        c,
    )


def cup_cap_dd(
    sign: str,
    kind: Literal["cup", "cap"],
    z: ArcDiagram,
    interval: int,
) -> TypeD:
    """
    Creating (cup) or capping (cap) a suture next to the terminal endpoint of
    an interval of Z.

    A cup from Z to Z' is (Id (x) i)_* DDId(Z) over A(Z) (x) A(-Z'), with
    i = i_0 for an R_+ cup and i_bc for an R_- cup. A cap uses the same
    inclusion on the other side: (i (x) Id)_* DDId(Z) over A(Z') (x) A(-Z).
    """
    if sign not in SIGNS:
        raise InterfaceError(f"Unknown sign '{sign}', expected one of {SIGNS}")
    z_prime, b, c = cup_diagram(z, interval)
    hom = hom_i_empty if sign == R_PLUS else hom_i_bc
    if kind == CUP:
        dd = _induce_right(z, hom(reverse(z_prime), b, c))
    elif kind == CAP:
        dd = _induce_left(hom(z_prime, b, c))
    else:
        raise InterfaceError(f"Unknown kind '{kind}', expected cup or cap")
    dd.name = f"{sign}{kind}"
    logger.debug(f"{kind} bimodule {dd!r}")
    return dd


def pointless_cap_dd(z: ArcDiagram) -> TypeD:
    """
    Capping off the pointless intervals of Z: DDId(Z) over A(Z) (x) A(-Z'),
    where Z' drops the intervals and A(-Z') is canonically A(-Z).
    """
    if not pointless_intervals(z):
        raise InterfaceError(f"{z} has no pointless interval to cap off")
    identity = dd_identity(z)
    algebra = TensorAlgebra(identity.algebra.left, strand_algebra(reverse(drop_pointless(z))))
    dd = identity.with_algebra(algebra)
    dd.name = "pointless-cap"
    return dd


def interior_handle_dd(
    kind: Literal["one-handle", "two-handle"],
    z_right: ArcDiagram,
    z_left: Optional[ArcDiagram] = None,
    point_map: Optional[dict] = None,
) -> TypeD:
    """
    An interior 2-handle (or 1-handle) next to a torus summand of the boundary.

    DDId(Z_R) (x) CFD(H_inf) is induced along A(T^2) (x) A(Z_R) -> A(Z_L),
    where Z_L contains the torus followed by Z_R as a subdiagram (by default
    Z_L is exactly that juxtaposition). The 2-handle bimodule lives over
    A(Z_L) (x) A(-Z_R); the 1-handle one is the same with the sides swapped.
    """
    if kind not in (ONE_HANDLE, TWO_HANDLE):
        raise InterfaceError(f"Unknown handle kind '{kind}'")
    juxtaposed = disjoint_union(torus(), z_right)
    union = union_map(torus(), z_right)
    if z_left is None:
        push = AlgebraMap.identity(union.target)
        z_left = juxtaposed
    else:
        push = hom_inclusion(embedding(juxtaposed, z_left, point_map))
    identity = dd_identity(z_right)
    source = tensor_product(solid_torus_dd(), identity)
    target = TensorAlgebra(strand_algebra(z_left), identity.algebra.right)

    def include(x) -> frozenset:
        t, (r, s) = x
        return frozenset((e, s) for u in union((t, r)) for e in push(u))

    f = AlgebraMap(source.algebra, target, include, "T2(x)Z_R->Z_L")
    dd = induct(f, source)
    dd.name = kind
    if kind == ONE_HANDLE:
        dd = transpose(dd)
    logger.debug(f"interior {kind} bimodule {dd!r}")
    return dd


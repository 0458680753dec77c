"""Subdiagram relations between arc diagrams."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from borderedsuture.arcdiagram.diagram import (
    ARC,
    PMC,
    ArcDiagram,
    disjoint_union,
    nondegeneracy_trace,
    zb_diagram,
)
from borderedsuture.errors import InterfaceError

logger = logging.getLogger("borderedsuture")


class SubdiagramKind(str, Enum):
    NOT_A_SUBDIAGRAM = "not-a-subdiagram"
    SUBDIAGRAM = "subdiagram"
    FULL_SUBDIAGRAM = "full-subdiagram"


@dataclass(frozen=True)
class Embedding:
    """A verified subdiagram relation small -> big, on linear positions."""

    small: ArcDiagram
    big: ArcDiagram
    positions: tuple[int, ...]

    @property
    def full(self) -> bool:
        return len(self.positions) == self.big.n_points

    @property
    def pair_map(self) -> tuple[int, ...]:
        """Pair index in small -> pair index in big."""
        return tuple(
            self.big.pair_of[self.positions[a]] for a, _ in self.small.pairs
        )

    def image(self, pos: int) -> int:
        return self.positions[pos]

    def preimage(self) -> dict[int, int]:
        """Position in big -> position in small, on the image only."""
        return {big: small for small, big in enumerate(self.positions)}


def _classify(
    small: ArcDiagram, big: ArcDiagram, point_map: Mapping[int, int]
) -> tuple[SubdiagramKind, Optional[str]]:
    if set(point_map) != set(small.point_ids):
        return SubdiagramKind.NOT_A_SUBDIAGRAM, "map must be defined on every point"
    images = [point_map[p] for p in small.point_ids]
    if len(set(images)) != len(images):
        return SubdiagramKind.NOT_A_SUBDIAGRAM, "map is not injective"
    if not set(images) <= set(big.point_ids):
        return SubdiagramKind.NOT_A_SUBDIAGRAM, "image leaves the target's points"
    for first, last in small.linear_intervals:
        targets = [big.position[point_map[small.point_ids[p]]] for p in range(first, last + 1)]
        for a, b in zip(targets, targets[1:]):
            if b != a + 1 or not big.same_interval(a, b):
                return (
                    SubdiagramKind.NOT_A_SUBDIAGRAM,
                    "an interval is not sent onto consecutive points of one interval",
                )
    for p, q in small.matching:
        a, b = big.position[point_map[p]], big.position[point_map[q]]
        if big.partner(a) != b:
            return SubdiagramKind.NOT_A_SUBDIAGRAM, f"pair ({p}, {q}) is not sent to a pair"
    if len(images) == big.n_points:
        return SubdiagramKind.FULL_SUBDIAGRAM, None
    return SubdiagramKind.SUBDIAGRAM, None


def subdiagram_embed(
    small: ArcDiagram, big: ArcDiagram, point_map: Mapping[int, int]
) -> SubdiagramKind:
    """
    Classify a candidate embedding given on point ids.

    Returns:
        not-a-subdiagram, subdiagram, or full-subdiagram (every point of big hit).
    """
    kind, reason = _classify(small, big, point_map)
    if reason:
        logger.debug(f"not a subdiagram: {reason}")
    return kind


def embedding(
    small: ArcDiagram, big: ArcDiagram, point_map: Optional[Mapping[int, int]] = None
) -> Embedding:
    """
    Build a verified Embedding; the identity on ids when no map is given.

    Raises:
        InterfaceError: if the map does not exhibit small as a subdiagram of big.
    """
    if point_map is None:
        point_map = {p: p for p in small.point_ids}
    kind, reason = _classify(small, big, point_map)
    if kind == SubdiagramKind.NOT_A_SUBDIAGRAM:
        raise InterfaceError(f"Not a subdiagram: {reason}")
    positions = tuple(big.position[point_map[p]] for p in small.point_ids)
    return Embedding(small, big, positions)


def _arc_endpoints(z: ArcDiagram) -> list[int]:
    """For each interval i, the interval whose top the surgered arc from i's bottom reaches."""
    ends = []
    for component in nondegeneracy_trace(z)[: len(z.linear_points)]:
        ends.append(component[-1][0])
    return ends


def embed_into_pmc(z: ArcDiagram) -> tuple[ArcDiagram, Embedding, bool]:
    """
    A pointed matched circle containing z, or z plus a copy of Z_b, as a full subdiagram.

    Intervals are glued top to bottom, always choosing a pair whose surgered
    arcs do not close up. When only two intervals remain and they are joined
    both ways by surgered arcs, a copy of Z_b is added first. The last
    interval is closed into a circle with the basepoint at the final junction.

    Returns:
        (pmc, embedding of z into pmc, whether Z_b was used)
    """
    if z.is_pmc:
        return z, embedding(z, z), False
    if z.n_points == 0:
        raise InterfaceError("The empty diagram does not embed into a pointed matched circle")

    used_zb = False
    work = z
    while len(work.linear_points) > 1:
        ends = _arc_endpoints(work)
        choice = None
        for top in range(len(work.linear_points)):
            for bottom in range(len(work.linear_points)):
                if top != bottom and ends[bottom] != top:
                    choice = (top, bottom)
                    break
            if choice:
                break
        if choice is None:
            work = disjoint_union(work, zb_diagram(max(work.point_ids) + 1))
            used_zb = True
            logger.debug("gluing a copy of Z_b to close up the diagram")
            continue
        top, bottom = choice
        intervals = list(work.linear_points)
        glued = intervals[top] + intervals[bottom]
        intervals[top] = glued
        del intervals[bottom]
        work = ArcDiagram(ARC, tuple(intervals), work.matching)

    circle = work.linear_points[0]
    pmc = ArcDiagram(PMC, (circle,), work.matching, len(circle) - 1)
    return pmc, embedding(z, pmc), used_zb

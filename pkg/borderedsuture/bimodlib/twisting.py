"""Boundary Dehn twist bimodules, composed from arcslides."""

from __future__ import annotations

import logging
from typing import Mapping, Optional, Sequence

import networkx as nx

from borderedsuture import constants
from borderedsuture.arcdiagram import ArcDiagram, nondegeneracy_trace
from borderedsuture.bimodlib.arcslide import NICE_DIAGRAM, ArcslideDatum, arcslide_dd
from borderedsuture.bimodlib.identity import dd_to_da
from borderedsuture.errors import InterfaceError
from borderedsuture.strandalg import strand_algebra
from borderedsuture.structures import TypeD, TypeDA, box_tensor_da, identity_da, reduce

logger = logging.getLogger("borderedsuture")

HALF = "half"
SINGLE = "single"


def boundary_components(z: ArcDiagram) -> list[list[int]]:
    """
    Boundary components of F(Z), each listed by the interval indices it meets.

    A component alternates between intervals of Z and arcs of the surgered
    diagram, which join the bottom of one interval to the top of another. A
    pointed matched circle has a single boundary component.
    """
    if z.is_pmc:
        return [[0]]
    graph = nx.Graph()
    for k in range(len(z.linear_points)):
        graph.add_edge(("bottom", k), ("top", k))
    for component in nondegeneracy_trace(z):
        first, last = component[0], component[-1]
        if first[1] == 0 and last[1] == len(z.linear_points[last[0]]):
            graph.add_edge(("bottom", first[0]), ("top", last[0]))
    components = [
        sorted({k for _, k in nodes}) for nodes in nx.connected_components(graph)
    ]
    return sorted(components)


def twisted_components(
    z: ArcDiagram,
    pairing: Optional[Sequence[tuple[int, int]]] = None,
    which: str = HALF,
    index: Optional[int] = None,
) -> list[int]:
    """
    The boundary components receiving a Dehn twist.

    With no pairing the 2n components are paired C_i <-> C_{i+n}. "half" twists
    the first component of every pair, "single" only that of pair `index`.

    Raises:
        InterfaceError: on unpaired or repeated components.
    """
    count = len(boundary_components(z))
    if pairing is None:
        if count % 2:
            raise InterfaceError(f"{count} boundary components cannot be paired")
        n = count // 2
        pairing = [(i, i + n) for i in range(n)]
    used = [c for pair in pairing for c in pair]
    if len(set(used)) != len(used) or any(not 0 <= c < count for c in used):
        raise InterfaceError(f"Invalid pairing {list(pairing)} of {count} boundary components")
    if which == HALF:
        return [pair[0] for pair in pairing]
    if which == SINGLE:
        if index is None or not 0 <= index < len(pairing):
            raise InterfaceError(f"No boundary pair {index} to twist")
        return [pairing[index][0]]
    raise InterfaceError(f"Unknown twist selection '{which}'")


def twist_factorization(z: ArcDiagram, component: int) -> list[ArcslideDatum]:
    """
    Arcslides realizing the Dehn twist along a boundary component of F(Z).

    The component must be a single interval whose end points are matched to
    each other; the handle of that pair then runs parallel to the component.
    Each point strictly inside the interval is slid, bottom first, over the
    lowest point, so it travels along the handle to the top. After all of
    them the interval is back in its original order.

    Returns:
        The slides in order, empty when the component has no such form.
    """
    if z.is_pmc:
        return []
    intervals = boundary_components(z)[component]
    if len(intervals) != 1:
        return []
    points = z.linear_points[intervals[0]]
    first, last = points[0], points[-1]
    if len(points) < 3 or {first, last} not in [set(p) for p in z.matching]:
        return []
    slides = []
    for b1 in points[1:-1]:
        s = ArcslideDatum(z, b1, first)
        slides.append(s)
        z = s.target
    return slides


def twisting_bimodule(
    z: ArcDiagram,
    factorization: Optional[Mapping[int, Sequence[ArcslideDatum]]] = None,
    pairing: Optional[Sequence[tuple[int, int]]] = None,
    which: str = HALF,
    index: Optional[int] = None,
    backend: str = NICE_DIAGRAM,
    tables: Optional[Mapping[str, TypeD]] = None,
    templates: Optional[Mapping] = None,
    cap: int = constants.DEFAULT_ITERATION_CAP,
) -> TypeDA:
    """
    The DA bimodule of Dehn twists on the selected boundary components.

    Each twist is realized by the arcslides listed for its component in
    `factorization`, or else by those of twist_factorization. The arcslide
    DA bimodules are composed left to right, reducing after every
    composition. The slides of a twist must bring the
    diagram back to Z.
    """
    result = identity_da(strand_algebra(z))
    for component in twisted_components(z, pairing, which, index):
        slides = (factorization or {}).get(component) or twist_factorization(z, component)
        if not slides:
            raise InterfaceError(f"No arcslide factorization for boundary component {component}")
        for s in slides:
            da = dd_to_da(arcslide_dd(s, backend, tables, templates), cap)
            result = reduce(box_tensor_da(da, result, cap), cap)
            logger.debug(f"after slide {s.b1} over {s.c1}: {result!r}")
        if result.left_algebra != strand_algebra(z):
            raise InterfaceError(
                f"The factorization of the twist on component {component} does not return to Z"
            )
    result.name = "tau"
    return result

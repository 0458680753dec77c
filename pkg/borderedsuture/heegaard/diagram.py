"""Nice bordered-sutured Heegaard diagrams as abstract region complexes.

The surface is cut by the alpha and beta curves into regions. Every region
is given by its boundary word: signed edges, "+e" traversing e from tail to
head and "-e" from head to tail. Alpha and beta edges separate two regions
and occur once with each sign; boundary and suture edges occur once.

Boundary edges join consecutive alpha endpoints of one interval of a side's
arc diagram; everything else on the boundary of the surface is suture.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Optional

import networkx as nx
from pydantic import ValidationError as PydanticValidationError

from borderedsuture.arcdiagram import ArcDiagram, reverse
from borderedsuture.arcdiagram import disjoint_union as union_of_diagrams
from borderedsuture.arcdiagram import is_valid as is_valid_arc_diagram
from borderedsuture.constants import HEEGAARD_SCHEMA
from borderedsuture.errors import SchemaError, ValidationError
from borderedsuture.model.heegaard import HeegaardModel

logger = logging.getLogger("borderedsuture")

LEFT = "left"
RIGHT = "right"
SIDES = (LEFT, RIGHT)

ALPHA = "alpha"
BETA = "beta"
BOUNDARY = "boundary"
SUTURE = "suture"


@dataclass(frozen=True)
class Endpoint:
    side: str
    point: int
    alpha: str


@dataclass(frozen=True)
class Edge:
    kind: str
    tail: str
    head: str
    curve: Optional[str] = None


@dataclass(frozen=True)
class HeegaardGenerator:
    """One intersection point on every beta circle, as point names."""

    points: tuple[str, ...]
    idempotent: object

    @property
    def name(self) -> str:
        return "+".join(self.points)


@dataclass
class NiceDiagram:
    sides: dict[str, ArcDiagram]
    alpha_circles: tuple[str, ...]
    beta_circles: tuple[str, ...]
    points: dict[str, tuple[str, str]]
    endpoints: dict[str, Endpoint]
    edges: dict[str, Edge]
    regions: dict[str, tuple[tuple[int, str], ...]]
    vertices: tuple[str, ...] = ()
    name: Optional[str] = None

    def __repr__(self) -> str:
        return (
            f"NiceDiagram({self.name or 'unnamed'}, {len(self.points)} points, "
            f"{len(self.regions)} regions)"
        )

    # curves and sides

    @cached_property
    def alpha_arcs(self) -> tuple[str, ...]:
        arcs = []
        for endpoint in self.endpoints.values():
            if endpoint.alpha not in arcs:
                arcs.append(endpoint.alpha)
        return tuple(arcs)

    @cached_property
    def arc_pairs(self) -> dict[str, tuple[str, int]]:
        """Alpha arc -> (side, matched pair index) of its endpoints."""
        result = {}
        for endpoint in self.endpoints.values():
            z = self.sides[endpoint.side]
            result[endpoint.alpha] = (endpoint.side, z.pair_of[z.position[endpoint.point]])
        return result

    def vertex_of(self, entry: tuple[int, str], end: bool = True) -> str:
        """The vertex where a signed word entry ends (or starts)."""
        sign, name = entry
        edge = self.edges[name]
        forward = sign > 0
        if end:
            return edge.head if forward else edge.tail
        return edge.tail if forward else edge.head

    def boundary_segment(self, name: str) -> tuple[str, tuple[int, int]]:
        """Side and (lower, upper) positions of a boundary edge."""
        edge = self.edges[name]
        tail, head = self.endpoints[edge.tail], self.endpoints[edge.head]
        z = self.sides[tail.side]
        a, b = sorted((z.position[tail.point], z.position[head.point]))
        return tail.side, (a, b)

    @cached_property
    def suture_regions(self) -> frozenset[str]:
        return frozenset(
            r
            for r, word in self.regions.items()
            if any(self.edges[e].kind == SUTURE for _, e in word)
        )

    def corners(self, region: str) -> Counter:
        """Intersection points at the corners of a region, with multiplicity."""
        word = self.regions[region]
        counts: Counter = Counter()
        for entry in word:
            vertex = self.vertex_of(entry)
            if vertex in self.points:
                counts[vertex] += 1
        return counts

    def region_graph(self, kinds: tuple[str, ...]) -> nx.Graph:
        """Regions, adjacent when they share an edge of one of the given kinds."""
        graph = nx.Graph()
        graph.add_nodes_from(self.regions)
        sides: dict = {}
        for r, word in self.regions.items():
            for _, e in word:
                if self.edges[e].kind in kinds:
                    sides.setdefault(e, []).append(r)
        for regions in sides.values():
            for a, b in zip(regions, regions[1:]):
                graph.add_edge(a, b)
        return graph

    # serialization

    @classmethod
    def from_model(cls, model: HeegaardModel) -> "NiceDiagram":
        sides = {}
        for side in SIDES:
            z = getattr(model.sides, side)
            if z is not None:
                sides[side] = ArcDiagram.from_model(z)
        regions = {
            name: tuple((1 if entry[0] == "+" else -1, entry[1:]) for entry in word)
            for name, word in model.regions.items()
        }
        return cls(
            sides=sides,
            alpha_circles=tuple(model.alpha_circles),
            beta_circles=tuple(model.beta_circles),
            points={p: (curves[0], curves[1]) for p, curves in model.points.items()},
            endpoints={
                name: Endpoint(e.side, e.point, e.alpha) for name, e in model.endpoints.items()
            },
            edges={
                name: Edge(e.kind, e.tail, e.head, e.curve) for name, e in model.edges.items()
            },
            regions=regions,
            vertices=tuple(model.vertices),
            name=model.name,
        )

    @classmethod
    def from_dict(cls, data: dict) -> "NiceDiagram":
        try:
            model = HeegaardModel.model_validate(data)
        except PydanticValidationError as e:
            raise SchemaError(f"Invalid Heegaard diagram: {e}")
        return cls.from_model(model)

    def to_dict(self) -> dict:
        data: dict = {"schema": HEEGAARD_SCHEMA}
        if self.name:
            data["name"] = self.name
        data["sides"] = {side: z.to_dict() for side, z in self.sides.items()}
        data["alpha_circles"] = list(self.alpha_circles)
        data["beta_circles"] = list(self.beta_circles)
        data["points"] = {p: list(curves) for p, curves in self.points.items()}
        data["endpoints"] = {
            name: {"side": e.side, "point": e.point, "alpha": e.alpha}
            for name, e in self.endpoints.items()
        }
        data["vertices"] = list(self.vertices)
        data["edges"] = {
            name: {
                "kind": e.kind,
                **({"curve": e.curve} if e.curve is not None else {}),
                "tail": e.tail,
                "head": e.head,
            }
            for name, e in self.edges.items()
        }
        data["regions"] = {
            name: [("+" if sign > 0 else "-") + e for sign, e in word]
            for name, word in self.regions.items()
        }
        return data


def load(path: Path | str) -> NiceDiagram:
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not valid JSON: {e}")
    h = NiceDiagram.from_dict(data)
    if h.name is None:
        h.name = path.stem
    return h


def dump(h: NiceDiagram, path: Path | str) -> None:
    with open(path, "w") as f:
        json.dump(h.to_dict(), f, indent=2)
        f.write("\n")


def _check_references(h: NiceDiagram) -> list[ValidationError]:
    errors: list[ValidationError] = []
    vertices = set(h.points) | set(h.endpoints) | set(h.vertices)
    alpha_curves = set(h.alpha_circles) | set(h.alpha_arcs)
    for side in h.sides.values():
        if not is_valid_arc_diagram(side):
            errors.append(ValidationError(f"Side diagram {side} is not a valid arc diagram"))
    for name, (alpha, beta) in h.points.items():
        if alpha not in alpha_curves:
            errors.append(ValidationError(f"Point {name} lies on unknown alpha curve {alpha}"))
        if beta not in h.beta_circles:
            errors.append(ValidationError(f"Point {name} lies on unknown beta circle {beta}"))
    for name, endpoint in h.endpoints.items():
        z = h.sides.get(endpoint.side)
        if z is None:
            errors.append(ValidationError(f"Endpoint {name} is on the missing {endpoint.side} side"))
        elif endpoint.point not in z.position:
            errors.append(
                ValidationError(f"Endpoint {name}: point {endpoint.point} is not on the {endpoint.side} side")
            )
        if endpoint.alpha in h.alpha_circles:
            errors.append(ValidationError(f"Alpha circle {endpoint.alpha} has an endpoint {name}"))
    for name, edge in h.edges.items():
        for vertex in (edge.tail, edge.head):
            if vertex not in vertices:
                errors.append(ValidationError(f"Edge {name} ends at unknown vertex {vertex}"))
        if edge.kind == ALPHA and edge.curve not in alpha_curves:
            errors.append(ValidationError(f"Alpha edge {name} is on unknown curve {edge.curve}"))
        if edge.kind == BETA and edge.curve not in h.beta_circles:
            errors.append(ValidationError(f"Beta edge {name} is on unknown curve {edge.curve}"))
        if edge.kind == BOUNDARY and not (edge.tail in h.endpoints and edge.head in h.endpoints):
            errors.append(ValidationError(f"Boundary edge {name} must join two alpha endpoints"))
    for region, word in h.regions.items():
        for _, e in word:
            if e not in h.edges:
                errors.append(ValidationError(f"Region {region} uses unknown edge {e}"))
    return errors


def _check_words(h: NiceDiagram) -> list[ValidationError]:
    errors: list[ValidationError] = []
    for region, word in h.regions.items():
        for k, entry in enumerate(word):
            following = word[(k + 1) % len(word)]
            if h.vertex_of(entry) != h.vertex_of(following, end=False):
                errors.append(
                    ValidationError(
                        f"Region {region}: {entry[1]} and {following[1]} do not meet"
                    )
                )
                break
    uses: dict = {name: [] for name in h.edges}
    for word in h.regions.values():
        for sign, e in word:
            uses[e].append(sign)
    for name, signs in uses.items():
        kind = h.edges[name].kind
        if kind in (ALPHA, BETA) and sorted(signs) != [-1, 1]:
            errors.append(
                ValidationError(f"{kind.capitalize()} edge {name} must bound two regions, once each way")
            )
        if kind in (BOUNDARY, SUTURE) and len(signs) != 1:
            errors.append(ValidationError(f"Boundary edge {name} must bound exactly one region"))
    return errors


def _check_sides(h: NiceDiagram) -> list[ValidationError]:
    """Alpha arcs end on matched pairs; boundary edges cover every segment once."""
    errors: list[ValidationError] = []
    ends: dict = {}
    for endpoint in h.endpoints.values():
        ends.setdefault(endpoint.alpha, []).append(endpoint)
    for arc, arc_ends in ends.items():
        if len(arc_ends) != 2 or arc_ends[0].side != arc_ends[1].side:
            errors.append(ValidationError(f"Alpha arc {arc} needs two endpoints on one side"))
            continue
        z = h.sides[arc_ends[0].side]
        a, b = (z.position[e.point] for e in arc_ends)
        if z.pair_of[a] != z.pair_of[b]:
            errors.append(ValidationError(f"Alpha arc {arc} does not join a matched pair"))
    for side, z in h.sides.items():
        covered = Counter(
            segment
            for name, edge in h.edges.items()
            if edge.kind == BOUNDARY
            for edge_side, segment in [h.boundary_segment(name)]
            if edge_side == side
        )
        for segment in z.segments:
            if covered[segment] != 1:
                errors.append(
                    ValidationError(
                        f"Segment {segment} of the {side} side is covered {covered[segment]} times"
                    )
                )
        extra = set(covered) - set(z.segments)
        if extra:
            errors.append(
                ValidationError(f"Boundary edges on the {side} side skip points: {sorted(extra)}")
            )
        arcs = {h.arc_pairs[arc][1] for arc in ends if h.arc_pairs[arc][0] == side}
        if arcs != set(range(z.n_pairs)):
            errors.append(ValidationError(f"Not every matched pair of the {side} side has an alpha arc"))
    return errors


def _check_sutures(h: NiceDiagram) -> list[ValidationError]:
    """The sutures meet every component of the complements of alpha and of beta."""
    errors: list[ValidationError] = []
    for cut, glue in ((ALPHA, BETA), (BETA, ALPHA)):
        for component in nx.connected_components(h.region_graph((glue,))):
            if not component & h.suture_regions:
                errors.append(
                    ValidationError(
                        f"Regions {sorted(component)} form a component of the complement "
                        f"of the {cut} curves missing the sutures"
                    )
                )
    return errors


def _check_niceness(h: NiceDiagram) -> list[ValidationError]:
    errors: list[ValidationError] = []
    for region in h.regions:
        if region in h.suture_regions:
            continue
        count = sum(h.corners(region).values())
        if count not in (2, 4):
            errors.append(
                ValidationError(
                    f"Region {region} away from the sutures has {count} corners; "
                    "only bigons and rectangles are allowed"
                )
            )
    return errors


def validate(h: NiceDiagram) -> list[ValidationError]:
    """
    Check that h is a well-formed nice diagram.

    Returns:
        A list of ValidationError diagnostics, empty when h is valid.
    """
    errors = _check_references(h)
    if errors:
        return errors
    errors = _check_words(h)
    if errors:
        return errors
    errors = _check_sides(h) + _check_sutures(h) + _check_niceness(h)
    logger.debug(f"validated {h!r}: {len(errors)} problems")
    return errors


def is_valid(h: NiceDiagram) -> bool:
    return not validate(h)


def algebra_sides(h: NiceDiagram) -> tuple[str, ...]:
    return tuple(side for side in SIDES if side in h.sides)


def generators(h: NiceDiagram) -> list[HeegaardGenerator]:
    """
    All generators: one point on each beta circle, every alpha circle used
    once, every alpha arc at most once.

    The idempotent of a generator on each side is the set of matched pairs
    whose alpha arcs it leaves unoccupied.
    """
    on_beta: dict = {beta: [] for beta in h.beta_circles}
    for name, (_, beta) in h.points.items():
        on_beta[beta].append(name)
    sides = algebra_sides(h)
    result = []
    for choice in product(*on_beta.values()):
        alphas = [h.points[p][0] for p in choice]
        if len(set(alphas)) != len(alphas) or not set(h.alpha_circles) <= set(alphas):
            continue
        occupied = {side: set() for side in sides}
        for alpha in alphas:
            if alpha in h.arc_pairs:
                side, pair = h.arc_pairs[alpha]
                occupied[side].add(pair)
        keys = tuple(
            frozenset(range(h.sides[side].n_pairs)) - occupied[side] for side in sides
        )
        result.append(HeegaardGenerator(tuple(choice), keys[0] if len(keys) == 1 else keys))
    logger.debug(f"{h!r}: {len(result)} generators")
    return result


def mirror(h: NiceDiagram) -> NiceDiagram:
    """
    The diagram with the orientation of the surface reversed.

    Every region word is read backwards and each side becomes its reverse,
    exchanging the roles of the two curve families.
    """
    return NiceDiagram(
        sides={side: reverse(z) for side, z in h.sides.items()},
        alpha_circles=h.alpha_circles,
        beta_circles=h.beta_circles,
        points=dict(h.points),
        endpoints=dict(h.endpoints),
        edges=dict(h.edges),
        regions={
            name: tuple((-sign, e) for sign, e in reversed(word))
            for name, word in h.regions.items()
        },
        vertices=h.vertices,
        name=f"mirror({h.name})" if h.name else None,
    )


def _offset(z1: ArcDiagram, z2: ArcDiagram) -> int:
    if set(z1.point_ids) & set(z2.point_ids):
        return max(z1.point_ids) + 1 - min(z2.point_ids)
    return 0


def disjoint_union(h1: NiceDiagram, h2: NiceDiagram) -> NiceDiagram:
    """
    Both diagrams side by side; names get the prefixes "1." and "2.".

    The sides are juxtaposed as arc diagrams, so the module of the union is
    the tensor product of the two modules.
    """
    sides = {}
    offsets = {}
    for side in SIDES:
        z1, z2 = h1.sides.get(side), h2.sides.get(side)
        if z1 is not None and z2 is not None:
            offsets[side] = _offset(z1, z2)
            sides[side] = union_of_diagrams(z1, z2)
        elif z1 is not None or z2 is not None:
            sides[side] = z1 if z1 is not None else z2
            offsets[side] = 0

    def tag(prefix: str, name: str) -> str:
        return f"{prefix}.{name}"

    points, endpoints, edges, regions = {}, {}, {}, {}
    for prefix, h in (("1", h1), ("2", h2)):
        shift = offsets if prefix == "2" else dict.fromkeys(offsets, 0)
        for p, (alpha, beta) in h.points.items():
            points[tag(prefix, p)] = (tag(prefix, alpha), tag(prefix, beta))
        for name, e in h.endpoints.items():
            endpoints[tag(prefix, name)] = Endpoint(
                e.side, e.point + shift[e.side], tag(prefix, e.alpha)
            )
        for name, e in h.edges.items():
            edges[tag(prefix, name)] = Edge(
                e.kind,
                tag(prefix, e.tail),
                tag(prefix, e.head),
                tag(prefix, e.curve) if e.curve is not None else None,
            )
        for name, word in h.regions.items():
            regions[tag(prefix, name)] = tuple((sign, tag(prefix, e)) for sign, e in word)
    return NiceDiagram(
        sides=sides,
        alpha_circles=tuple(tag("1", a) for a in h1.alpha_circles)
        + tuple(tag("2", a) for a in h2.alpha_circles),
        beta_circles=tuple(tag("1", b) for b in h1.beta_circles)
        + tuple(tag("2", b) for b in h2.beta_circles),
        points=points,
        endpoints=endpoints,
        edges=edges,
        regions=regions,
        vertices=tuple(tag("1", v) for v in h1.vertices) + tuple(tag("2", v) for v in h2.vertices),
        name=f"{h1.name}+{h2.name}",
    )

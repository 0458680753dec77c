"""Arc diagrams and pointed matched circles.

Points carry integer identifiers in files. Internally every diagram is laid
out on linear positions 0..N-1: a pointed matched circle is cut open at its
basepoint, an arc diagram's intervals are concatenated in order. Matched
pairs are numbered by their order in the matching list.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from borderedsuture.errors import SchemaError, ValidationError
from borderedsuture.model.arcdiagram import ArcDiagramModel

logger = logging.getLogger("borderedsuture")

PMC = "pmc"
ARC = "arc"


@dataclass(frozen=True, order=True)
class Chord:
    """An interval [start, end] between two points of one linear interval."""

    start: int
    end: int

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"Chord must go upwards, got {self.start} -> {self.end}")


@dataclass(frozen=True)
class ArcDiagram:
    """
    An arc diagram (flavor "arc") or a pointed matched circle (flavor "pmc").

    `intervals` and `matching` hold the point identifiers exactly as given, so
    that serialization round-trips. `basepoint_after` indexes the circle's point
    list; the circle is cut right after that point.
    """

    flavor: str
    intervals: tuple[tuple[int, ...], ...]
    matching: tuple[tuple[int, int], ...]
    basepoint_after: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(
            self, "intervals", tuple(tuple(interval) for interval in self.intervals)
        )
        object.__setattr__(
            self, "matching", tuple((int(p), int(q)) for p, q in self.matching)
        )
        if self.flavor == PMC and self.basepoint_after is None and self.intervals:
            object.__setattr__(self, "basepoint_after", len(self.intervals[0]) - 1)

    # layout

    @property
    def is_pmc(self) -> bool:
        return self.flavor == PMC

    @cached_property
    def linear_points(self) -> tuple[tuple[int, ...], ...]:
        """Point ids of each linear interval in increasing position."""
        if self.is_pmc:
            if not self.intervals:
                return ()
            circle = self.intervals[0]
            b = self.basepoint_after % len(circle) if circle else 0
            return (tuple(circle[b + 1 :]) + tuple(circle[: b + 1]),)
        return self.intervals

    @cached_property
    def point_ids(self) -> tuple[int, ...]:
        return tuple(p for interval in self.linear_points for p in interval)

    @cached_property
    def position(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.point_ids)}

    @property
    def n_points(self) -> int:
        return len(self.point_ids)

    @cached_property
    def linear_intervals(self) -> tuple[tuple[int, int], ...]:
        """(first, last) position of each nonempty linear interval."""
        spans = []
        start = 0
        for interval in self.linear_points:
            if interval:
                spans.append((start, start + len(interval) - 1))
            start += len(interval)
        return tuple(spans)

    @cached_property
    def interval_of(self) -> dict[int, int]:
        """Position -> index into linear_intervals."""
        return {
            pos: idx
            for idx, (first, last) in enumerate(self.linear_intervals)
            for pos in range(first, last + 1)
        }

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Matched pairs as sorted position tuples, in matching order."""
        return tuple(
            tuple(sorted((self.position[p], self.position[q])))  # type: ignore[misc]
            for p, q in self.matching
        )

    @property
    def n_pairs(self) -> int:
        return len(self.matching)

    @cached_property
    def pair_of(self) -> dict[int, int]:
        """Position -> matched pair index."""
        return {pos: idx for idx, pair in enumerate(self.pairs) for pos in pair}

    def partner(self, pos: int) -> int:
        a, b = self.pairs[self.pair_of[pos]]
        return b if pos == a else a

    def same_interval(self, a: int, b: int) -> bool:
        return self.interval_of.get(a) == self.interval_of.get(b)

    @property
    def genus(self) -> int:
        if not self.is_pmc:
            raise ValueError("Genus is only defined for pointed matched circles")
        return self.n_points // 4

    # chords and supports

    @cached_property
    def segments(self) -> tuple[tuple[int, int], ...]:
        """Elementary segments (p, p + 1) inside each linear interval."""
        return tuple(
            (p, p + 1)
            for first, last in self.linear_intervals
            for p in range(first, last)
        )

    @property
    def n_segments(self) -> int:
        return len(self.segments)

    @cached_property
    def segment_index(self) -> dict[int, int]:
        """Lower endpoint of a segment -> its coordinate in support vectors."""
        return {lower: idx for idx, (lower, _) in enumerate(self.segments)}

    def span_support(self, start: int, end: int) -> tuple[int, ...]:
        """Coverage vector of the segments between positions start and end."""
        vector = [0] * self.n_segments
        for p in range(start, end):
            vector[self.segment_index[p]] += 1
        return tuple(vector)

    def to_dict(self) -> dict:
        data = {
            "flavor": self.flavor,
            "intervals": [list(interval) for interval in self.intervals],
            "matching": [list(pair) for pair in self.matching],
        }
        if self.is_pmc:
            data["basepointAfter"] = self.basepoint_after
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ArcDiagram":
        try:
            model = ArcDiagramModel.model_validate(data)
        except PydanticValidationError as e:
            raise SchemaError(f"Invalid arc diagram: {e}")
        return cls.from_model(model)

    @classmethod
    def from_model(cls, model: ArcDiagramModel) -> "ArcDiagram":
        return cls(
            flavor=model.flavor,
            intervals=tuple(tuple(i) for i in model.intervals),
            matching=tuple((p, q) for p, q in model.matching),
            basepoint_after=model.basepointAfter,
        )

    def __str__(self) -> str:
        return json.dumps(self.to_dict())


def empty_diagram() -> ArcDiagram:
    return ArcDiagram(ARC, (), ())


def zb_diagram(first_id: int = 0) -> ArcDiagram:
    """Two intervals with one point each, the two points matched."""
    return ArcDiagram(ARC, ((first_id,), (first_id + 1,)), ((first_id, first_id + 1),))


def load(path: Path | str) -> ArcDiagram:
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not valid JSON: {e}")
    return ArcDiagram.from_dict(data)


def dump(z: ArcDiagram, path: Path | str) -> None:
    with open(path, "w") as f:
        json.dump(z.to_dict(), f, indent=2)
        f.write("\n")


def chords(z: ArcDiagram) -> list[Chord]:
    """All chords of z, ordered by (start, end)."""
    return [
        Chord(a, b)
        for first, last in z.linear_intervals
        for a in range(first, last + 1)
        for b in range(a + 1, last + 1)
    ]


def support(z: ArcDiagram, chord: Chord) -> tuple[int, ...]:
    if not z.same_interval(chord.start, chord.end):
        raise ValueError(f"{chord} is not a chord of this diagram")
    return z.span_support(chord.start, chord.end)


def nondegeneracy_trace(z: ArcDiagram) -> list[list[tuple[int, int]]]:
    """
    Components of the 1-manifold obtained by surgery on Z along the matching.

    A gap (i, g) is the stretch of interval i just below its g-th point
    (g = len(interval) is the top end). Walking up a gap reaches a point, the
    surgery jumps to its partner and the walk resumes in the gap above it.
    For a circle there are N gaps (i = 0) and every component is closed.
    Components are returned as the ordered gaps they pass through.
    """
    if z.is_pmc:
        n = z.n_points
        seen: set[int] = set()
        cycles = []
        for start in range(n):
            if start in seen:
                continue
            cycle = []
            gap = start
            while gap not in seen:
                seen.add(gap)
                cycle.append((0, gap))
                gap = (z.partner(gap) + 1) % n
            cycles.append(cycle)
        return cycles

    lengths = [len(interval) for interval in z.linear_points]
    offsets = [sum(lengths[:i]) for i in range(len(lengths))]

    def locate(pos: int) -> tuple[int, int]:
        for i, offset in enumerate(offsets):
            if offset <= pos < offset + lengths[i]:
                return i, pos - offset
        raise KeyError(pos)

    def step(gap: tuple[int, int]) -> Optional[tuple[int, int]]:
        i, g = gap
        if g == lengths[i]:
            return None
        j, h = locate(z.partner(offsets[i] + g))
        return (j, h + 1)

    seen_gaps: set[tuple[int, int]] = set()
    components = []
    for i in range(len(lengths)):
        path = []
        gap: Optional[tuple[int, int]] = (i, 0)
        while gap is not None and gap not in seen_gaps:
            seen_gaps.add(gap)
            path.append(gap)
            gap = step(gap)
        components.append(path)
    # Whatever was not reached from a bottom end closes up into a circle.
    for i in range(len(lengths)):
        for g in range(lengths[i] + 1):
            if (i, g) in seen_gaps:
                continue
            cycle = []
            gap = (i, g)
            while gap is not None and gap not in seen_gaps:
                seen_gaps.add(gap)
                cycle.append(gap)
                gap = step(gap)
            components.append(cycle)
    return components


def _closed_components(z: ArcDiagram) -> list[list[tuple[int, int]]]:
    components = nondegeneracy_trace(z)
    if z.is_pmc:
        return components if len(components) != 1 else []
    arcs = len(z.linear_points)
    return components[arcs:]


def validate(z: ArcDiagram) -> list[ValidationError]:
    """
    Check that z is a well-formed nondegenerate diagram.

    Returns:
        A list of ValidationError diagnostics, empty when z is valid.
    """
    errors: list[ValidationError] = []
    if z.flavor not in (PMC, ARC):
        errors.append(ValidationError(f"Unknown flavor '{z.flavor}'"))
        return errors

    ids = [p for interval in z.intervals for p in interval]
    duplicates = sorted({p for p in ids if ids.count(p) > 1})
    if duplicates:
        errors.append(ValidationError(f"Duplicate point ids: {duplicates}"))
        return errors

    matched = [p for pair in z.matching for p in pair]
    for p, q in z.matching:
        if p == q:
            errors.append(ValidationError(f"Point {p} is matched to itself"))
    unknown = sorted(set(matched) - set(ids))
    if unknown:
        errors.append(ValidationError(f"Matching refers to unknown points {unknown}"))
    twice = sorted({p for p in matched if matched.count(p) > 1})
    if twice:
        errors.append(ValidationError(f"Points matched more than once: {twice}"))
    unmatched = sorted(set(ids) - set(matched))
    if unmatched:
        errors.append(ValidationError(f"Unmatched points: {unmatched}"))
    if errors:
        return errors

    if z.is_pmc:
        if len(z.intervals) != 1:
            errors.append(
                ValidationError(
                    f"A pointed matched circle has one circle, got {len(z.intervals)}"
                )
            )
            return errors
        n = len(z.intervals[0])
        if n == 0 or n % 4 != 0:
            errors.append(
                ValidationError(
                    f"A pointed matched circle needs 4k points (k >= 1), got {n}"
                )
            )
        if z.basepoint_after is None or not 0 <= z.basepoint_after < max(n, 1):
            errors.append(
                ValidationError(f"basepointAfter {z.basepoint_after} is out of range")
            )
        if errors:
            return errors
        components = nondegeneracy_trace(z)
        if len(components) != 1:
            errors.append(
                ValidationError(
                    f"Degenerate matching: surgery gives {len(components)} circles "
                    f"instead of one (surface would be disconnected)"
                )
            )
        return errors

    for cycle in _closed_components(z):
        errors.append(
            ValidationError(
                "Degenerate matching: surgery closes off a component missing the "
                f"boundary, through gaps {cycle}"
            )
        )
    return errors


def is_valid(z: ArcDiagram) -> bool:
    return not validate(z)


def reverse(z: ArcDiagram) -> ArcDiagram:
    """
    The diagram -Z: orientation and order of the intervals reversed.

    Linear positions map p -> N - 1 - p and pair indices are preserved.
    """
    if z.is_pmc:
        n = len(z.intervals[0]) if z.intervals else 0
        basepoint = (n - 2 - z.basepoint_after) % n if n else None
        return ArcDiagram(
            PMC,
            (tuple(reversed(z.intervals[0])),) if z.intervals else (),
            z.matching,
            basepoint,
        )
    return ArcDiagram(
        ARC,
        tuple(tuple(reversed(interval)) for interval in reversed(z.intervals)),
        z.matching,
    )


def relabel(z: ArcDiagram, offset: int) -> ArcDiagram:
    """Shift every point id by offset."""
    return ArcDiagram(
        z.flavor,
        tuple(tuple(p + offset for p in interval) for interval in z.intervals),
        tuple((p + offset, q + offset) for p, q in z.matching),
        z.basepoint_after,
    )


def disjoint_union(z1: ArcDiagram, z2: ArcDiagram) -> ArcDiagram:
    """
    Juxtapose two diagrams. Circles are cut open at their basepoints.

    Positions of z2 are shifted by the point count of z1, pair indices by its
    pair count. Clashing point ids of z2 are shifted past those of z1.
    """
    if z2.n_points == 0:
        return z1
    if z1.n_points == 0:
        return z2
    if set(z1.point_ids) & set(z2.point_ids):
        z2 = relabel(z2, max(z1.point_ids) + 1 - min(z2.point_ids))
    return ArcDiagram(
        ARC,
        tuple(z1.linear_points) + tuple(z2.linear_points),
        z1.matching + z2.matching,
    )


def drop_pointless(z: ArcDiagram) -> ArcDiagram:
    """z without its pointless (empty) intervals."""
    if z.is_pmc:
        return z
    return ArcDiagram(ARC, tuple(i for i in z.intervals if i), z.matching)


def pointless_intervals(z: ArcDiagram) -> list[int]:
    """Indices of the intervals carrying no points."""
    return [k for k, interval in enumerate(z.intervals) if not interval]


def as_arc_diagram(z: ArcDiagram) -> ArcDiagram:
    """The circle cut open at its basepoint; arc diagrams are returned as is."""
    if not z.is_pmc:
        return z
    return ArcDiagram(ARC, z.linear_points, z.matching)


def linear_order(z: ArcDiagram) -> list[int]:
    """Point ids in linear position order."""
    return list(z.point_ids)


def ensure_valid_diagram(z: ArcDiagram) -> ArcDiagram:
    errors = validate(z)
    if errors:
        raise ValidationError(*errors)
    return z


def same_shape(z1: ArcDiagram, z2: ArcDiagram) -> bool:
    """Equal as algebra interfaces: same interval lengths and matched positions."""
    return (
        [last - first for first, last in z1.linear_intervals]
        == [last - first for first, last in z2.linear_intervals]
        and z1.pairs == z2.pairs
    )


def from_points(
    flavor: str, intervals: Sequence[Sequence[int]], matching: Sequence[Sequence[int]]
) -> ArcDiagram:
    return ArcDiagram(
        flavor,
        tuple(tuple(i) for i in intervals),
        tuple((p, q) for p, q in matching),
    )

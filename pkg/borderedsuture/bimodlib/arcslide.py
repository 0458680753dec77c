"""Arcslides and their type DD bimodules.

Sliding the foot b1 of one matched pair over an adjacent foot c1 of another
moves b1 along the handle of c: it reappears next to the partner c2, on the
opposite side. The DD bimodule of a slide lives over A(Z') (x) A(-Z) for a
slide from Z to Z', so that its DA bimodule carries modules over A(Z) to
modules over A(Z').

Two backends produce the bimodule: evaluation of a nice Heegaard diagram
from the template registry, and near-chord tables supplied by the caller.
Neither invents data; a slide without a template or table is refused.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional

from borderedsuture.arcdiagram import PMC, ArcDiagram, is_valid, reverse
from borderedsuture.bimodlib.identity import dd_to_da
from borderedsuture.errors import BackendDisagreementError, InterfaceError
from borderedsuture.heegaard import arcslide_templates, bsd_from_nice_diagram, load_template
from borderedsuture.strandalg import TensorAlgebra, strand_algebra
from borderedsuture.structures import (
    TypeD,
    box_tensor,
    ensure_structure,
    homology_rank,
    mor_complex,
)

logger = logging.getLogger("borderedsuture")

NICE_DIAGRAM = "nice-diagram"
NEAR_CHORD = "near-chord"
BOTH = "both"
BACKENDS = (NICE_DIAGRAM, NEAR_CHORD, BOTH)

OVER = "over"
UNDER = "under"


@dataclass(frozen=True)
class ArcslideDatum:
    """The slide of point b1 over the adjacent point c1 of the diagram z."""

    z: ArcDiagram
    b1: int
    c1: int

    def __post_init__(self):
        z = self.z
        for point in (self.b1, self.c1):
            if point not in z.position:
                raise InterfaceError(f"Illegal slide: point {point} is not in {z}")
        pb, pc = z.position[self.b1], z.position[self.c1]
        if abs(pb - pc) != 1 or not z.same_interval(pb, pc):
            raise InterfaceError(
                f"Illegal slide: {self.b1} and {self.c1} are not adjacent feet"
            )
        if z.pair_of[pb] == z.pair_of[pc]:
            raise InterfaceError(
                f"Illegal slide: {self.b1} and {self.c1} belong to the same pair"
            )

    @property
    def b2(self) -> int:
        return self.z.point_ids[self.z.partner(self.z.position[self.b1])]

    @property
    def c2(self) -> int:
        return self.z.point_ids[self.z.partner(self.z.position[self.c1])]

    @property
    def b_pair(self) -> int:
        return self.z.pair_of[self.z.position[self.b1]]

    @property
    def c_pair(self) -> int:
        return self.z.pair_of[self.z.position[self.c1]]

    @property
    def above(self) -> bool:
        """Whether b1 sits right above c1."""
        return self.z.position[self.b1] == self.z.position[self.c1] + 1

    @property
    def direction(self) -> str:
        """over when b2 lies strictly between c1 and c2, under otherwise."""
        position = self.z.position
        low, high = sorted((position[self.c1], position[self.c2]))
        return OVER if low < position[self.b2] < high else UNDER

    @cached_property
    def target(self) -> ArcDiagram:
        z = self.z
        intervals = []
        for interval in z.linear_points:
            points = [p for p in interval if p != self.b1]
            if self.c2 in points:
                k = points.index(self.c2)
                points.insert(k if self.above else k + 1, self.b1)
            intervals.append(tuple(points))
        if z.is_pmc:
            circle = intervals[0]
            result = ArcDiagram(PMC, (circle,), z.matching, len(circle) - 1)
        else:
            result = ArcDiagram(z.flavor, tuple(intervals), z.matching)
        if not is_valid(result):
            raise InterfaceError(f"Illegal slide: sliding {self.b1} over {self.c1} degenerates {z}")
        return result

    def inverse(self) -> "ArcslideDatum":
        """Slide b1 back over c2."""
        return ArcslideDatum(self.target, self.b1, self.c2)

    @property
    def pattern(self) -> str:
        """Template key: the slide up to relabeling of point ids."""
        z = self.z
        return json.dumps(
            {
                "flavor": z.flavor,
                "intervals": [last - first + 1 for first, last in z.linear_intervals],
                "pairs": [list(p) for p in z.pairs],
                "b1": z.position[self.b1],
                "c1": z.position[self.c1],
            },
            sort_keys=True,
            separators=(",", ":"),
        )


def near_complementary(s: ArcslideDatum) -> list[tuple[frozenset, frozenset]]:
    """
    Idempotent pairs (I, J) of A(Z') and A(-Z) that are complementary, or
    share exactly the pair of c while both miss the pair of b.
    """
    pairs = frozenset(range(s.z.n_pairs))
    algebra = strand_algebra(s.target)
    result = []
    for key in algebra.idempotents():
        result.append((key, pairs - key))
        if s.c_pair in key and s.b_pair not in key:
            result.append((key, (pairs - key - {s.b_pair}) | {s.c_pair}))
    return result


def _expected_algebra(s: ArcslideDatum) -> TensorAlgebra:
    return TensorAlgebra(strand_algebra(s.target), strand_algebra(reverse(s.z)))


def _accept(s: ArcslideDatum, dd: TypeD, backend: str) -> TypeD:
    if dd.algebra != _expected_algebra(s):
        raise InterfaceError(f"The {backend} bimodule for {s.pattern} is over the wrong algebras")
    allowed = set(near_complementary(s))
    keys = {tuple(key) for key in dd.generators.values()}
    if keys - allowed:
        raise InterfaceError(
            f"The {backend} bimodule has generators outside the near-complementary pairs"
        )
    pairs = frozenset(range(s.z.n_pairs))
    if all(left | right == pairs for left, right in keys):
        raise InterfaceError(
            f"The {backend} bimodule for {s.pattern} has only complementary generators,"
            " which is the identity rather than a slide"
        )
    dd = ensure_structure(dd)
    dd.name = f"arcslide[{s.b1} over {s.c1}]"
    return dd


def _from_template(s: ArcslideDatum, templates: Optional[Mapping]) -> TypeD:
    registry = {**arcslide_templates(), **(templates or {})}
    if s.pattern not in registry:
        raise InterfaceError(f"No nice arcslide template for the slide pattern {s.pattern}")
    template = registry[s.pattern]
    h = load_template(template) if isinstance(template, str) else template
    return _accept(s, bsd_from_nice_diagram(h).with_algebra(_expected_algebra(s)), NICE_DIAGRAM)


def _from_tables(s: ArcslideDatum, tables: Optional[Mapping[str, TypeD]]) -> TypeD:
    if not tables or s.pattern not in tables:
        raise InterfaceError(
            f"The near-chord backend needs a supplied table for the slide pattern {s.pattern}"
        )
    return _accept(s, tables[s.pattern], NEAR_CHORD)


def check_agreement(
    first: TypeD,
    second: TypeD,
    probes: Iterable[TypeD],
    **rank_options,
) -> None:
    """
    Compare two DD bimodules through their actions on probe modules.

    For each probe M with N_i = DA(d_i) (box) M, the ranks of Mor(N1, N1),
    Mor(N2, N2) and Mor(N1, N2) must coincide.

    Raises:
        BackendDisagreementError: on the first probe where they differ.
    """
    da1, da2 = dd_to_da(first), dd_to_da(second)
    for probe in probes:
        n1, n2 = box_tensor(da1, probe), box_tensor(da2, probe)
        ranks = [
            homology_rank(mor_complex(n1, n1), **rank_options),
            homology_rank(mor_complex(n2, n2), **rank_options),
            homology_rank(mor_complex(n1, n2), **rank_options),
        ]
        logger.debug(f"probe {probe.name}: ranks {ranks}")
        if len(set(ranks)) != 1:
            raise BackendDisagreementError(
                f"Arcslide backends disagree on probe {probe.name}: Mor ranks {ranks}"
            )


def arcslide_dd(
    s: ArcslideDatum,
    backend: str = NICE_DIAGRAM,
    tables: Optional[Mapping[str, TypeD]] = None,
    templates: Optional[Mapping] = None,
    probes: Iterable[TypeD] = (),
) -> TypeD:
    """
    The type DD bimodule of an arcslide.

    Raises:
        InterfaceError: unknown backend, or no template / table for the slide.
        BackendDisagreementError: with backend "both", when the two results
            differ on a probe.
    """
    if backend not in BACKENDS:
        raise InterfaceError(f"Unknown arcslide backend '{backend}', expected one of {BACKENDS}")
    if backend == NICE_DIAGRAM:
        return _from_template(s, templates)
    if backend == NEAR_CHORD:
        return _from_tables(s, tables)
    nice, near = _from_template(s, templates), _from_tables(s, tables)
    check_agreement(nice, near, probes)
    return nice

"""Curve counts on nice diagrams.

A domain is a connected set of regions away from the sutures, each with
multiplicity one. It contributes an arrow x -> y when its alpha boundary
runs from x to y and its index

    e(D) + n_x(D) + n_y(D) + (number of chords) / 2

equals one. Euler measures and point measures are read off the region
words: a region with k corners has e = 1 - k/4, and every corner at a
point p adds 1/4 to n_p.
"""

from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Optional

import networkx as nx
import tqdm

from borderedsuture.arcdiagram import Chord
from borderedsuture.constants import MAX_DOMAIN_REGIONS
from borderedsuture.errors import InterfaceError, TerminationError, ValidationError
from borderedsuture.heegaard.diagram import (
    ALPHA,
    BETA,
    BOUNDARY,
    HeegaardGenerator,
    NiceDiagram,
    algebra_sides,
    generators,
    validate,
)
from borderedsuture.strandalg import TensorAlgebra, strand_algebra
from borderedsuture.structures import Arrow, TypeD, ensure_structure

logger = logging.getLogger("borderedsuture")


def _domains(h: NiceDiagram) -> list[frozenset[str]]:
    interior = sorted(set(h.regions) - h.suture_regions)
    if len(interior) > MAX_DOMAIN_REGIONS:
        raise TerminationError(
            f"{h!r} has {len(interior)} regions away from the sutures; "
            f"domains are enumerated up to {MAX_DOMAIN_REGIONS}"
        )
    graph = h.region_graph((ALPHA, BETA)).subgraph(interior)
    domains = []
    for size in range(1, len(interior) + 1):
        for regions in combinations(interior, size):
            if nx.is_connected(graph.subgraph(regions)):
                domains.append(frozenset(regions))
    return domains


def _alpha_boundary(h: NiceDiagram, domain: frozenset[str]) -> Counter:
    """Boundary of the alpha part of the boundary of domain, on points."""
    v: Counter = Counter()
    for region in domain:
        for sign, e in h.regions[region]:
            edge = h.edges[e]
            if edge.kind != ALPHA:
                continue
            v[edge.head] += sign
            v[edge.tail] -= sign
    return Counter({p: c for p, c in v.items() if c and p in h.points})


def _index_terms(h: NiceDiagram, domain: frozenset[str]) -> tuple[Fraction, Counter]:
    euler = Fraction(0)
    corners: Counter = Counter()
    for region in domain:
        euler += 1 - Fraction(len(h.regions[region]), 4)
        corners.update(h.corners(region))
    return euler, corners


def _chord_runs(h: NiceDiagram, domain: frozenset[str]) -> dict[str, list[tuple[int, int]]]:
    """Contiguous runs of bordered boundary covered by domain, per side."""
    covered: dict = {}
    for region in domain:
        for _, e in h.regions[region]:
            if h.edges[e].kind == BOUNDARY:
                side, segment = h.boundary_segment(e)
                covered.setdefault(side, []).append(segment)
    runs: dict = {}
    for side, segments in covered.items():
        merged: list[list[int]] = []
        for a, b in sorted(segments):
            if merged and merged[-1][1] == a:
                merged[-1][1] = b
            else:
                merged.append([a, b])
        runs[side] = [(a, b) for a, b in merged]
    return runs


def _side_key(generator: HeegaardGenerator, sides: tuple[str, ...], side: str):
    if len(sides) == 1:
        return generator.idempotent
    return generator.idempotent[sides.index(side)]


def _label(
    h: NiceDiagram,
    algebras: dict,
    runs: dict,
    x: HeegaardGenerator,
    y: HeegaardGenerator,
) -> Optional[tuple]:
    sides = algebra_sides(h)
    label = []
    for side in sides:
        algebra = algebras[side]
        source, target = _side_key(x, sides, side), _side_key(y, sides, side)
        if side not in runs:
            if source != target:
                return None
            label.append(algebra.idempotent(source))
            continue
        ((start, end),) = runs[side]
        matches = [
            a
            for a in algebra.chord_element(Chord(start, end))
            if algebra.left_idempotent(a) == source and algebra.right_idempotent(a) == target
        ]
        if not matches:
            return None
        label.append(matches[0])
    return tuple(label)


def bsd_from_nice_diagram(h: NiceDiagram, check: bool = True) -> TypeD:
    """
    Compute the type D (or DD) structure of a nice diagram.

    Args:
        h: A nice diagram with at least one bordered side.
        check: Verify the structure equation of the result.

    Returns:
        A TypeD over A(left), A(right), or their tensor product when both
        sides are bordered. Generators are named by their points.

    Raises:
        ValidationError: if h is not a valid nice diagram, or a domain of
            index one covers two chords on one side.
        InterfaceError: if h has no bordered side.
        TerminationError: if h has too many regions to enumerate domains.
    """
    errors = validate(h)
    if errors:
        raise ValidationError(*errors)
    sides = algebra_sides(h)
    if not sides:
        raise InterfaceError(f"{h!r} has no bordered boundary")
    algebras = {side: strand_algebra(h.sides[side]) for side in sides}
    algebra = (
        algebras[sides[0]]
        if len(sides) == 1
        else TensorAlgebra(*(algebras[side] for side in sides))
    )

    gens = generators(h)
    by_points = {frozenset(g.points): g for g in gens}
    arrows = []
    domains = _domains(h)
    logger.debug(f"{h!r}: {len(domains)} connected domains")
    for domain in tqdm.tqdm(
        domains, desc="domains", disable=not logger.isEnabledFor(logging.DEBUG)
    ):
        v = _alpha_boundary(h, domain)
        if any(abs(c) > 1 for c in v.values()):
            continue
        leaving = {p for p, c in v.items() if c < 0}
        entering = {p for p, c in v.items() if c > 0}
        euler, corners = _index_terms(h, domain)
        runs = _chord_runs(h, domain)
        n_chords = sum(len(r) for r in runs.values())
        if not runs and not v:
            continue
        for x in gens:
            points = set(x.points)
            if not leaving <= points or entering & points:
                continue
            y = by_points.get(frozenset((points - leaving) | entering))
            if y is None:
                continue
            index = (
                euler
                + Fraction(sum(corners[p] for p in x.points), 4)
                + Fraction(sum(corners[p] for p in y.points), 4)
                + Fraction(n_chords, 2)
            )
            if index != 1:
                continue
            if any(len(r) > 1 for r in runs.values()):
                raise ValidationError(
                    f"Domain {sorted(domain)} of {h!r} covers several chords on one side"
                )
            label = _label(h, algebras, runs, x, y)
            if label is None:
                continue
            logger.debug(f"{h!r}: domain {sorted(domain)} gives {x.name} -> {y.name}")
            arrows.append(
                Arrow(x.name, label[0] if len(label) == 1 else label, y.name)
            )

    d = TypeD(
        algebra,
        {g.name: g.idempotent for g in gens},
        arrows,
        name=h.name,
    )
    logger.info(f"evaluated {h!r}: {d!r}")
    if check:
        ensure_structure(d)
    return d

"""The big strands algebra on linearly ordered points.

A section is a partial bijection phi from a set S of positions to a set T
with phi(s) >= s, stored as sorted (start, end) pairs; start == end is a
horizontal strand. Products concatenate and vanish when the number of
crossings is not additive; the differential resolves one crossing at a time.
"""

from __future__ import annotations

from typing import Iterable, Optional

Section = tuple[tuple[int, int], ...]


def make_section(strands: Iterable[tuple[int, int]]) -> Section:
    return tuple(sorted(strands))


def inversions(section: Section) -> int:
    """Number of crossing pairs, horizontal strands included."""
    count = 0
    for i, (_, t1) in enumerate(section):
        for _, t2 in section[i + 1 :]:
            if t1 > t2:
                count += 1
    return count


def starts(section: Section) -> frozenset[int]:
    return frozenset(s for s, _ in section)


def ends(section: Section) -> frozenset[int]:
    return frozenset(t for _, t in section)


def compose(first: Section, second: Section) -> Optional[Section]:
    """
    The product "first, then second", or None when it vanishes.

    Vanishes unless the ends of first are the starts of second, and when
    the concatenation has a double crossing.
    """
    if ends(first) != starts(second):
        return None
    follow = dict(second)
    result = make_section((s, follow[t]) for s, t in first)
    if inversions(result) != inversions(first) + inversions(second):
        return None
    return result


def differential(section: Section) -> list[Section]:
    """Resolutions of single crossings that lower the crossing count by exactly one."""
    total = inversions(section)
    terms = []
    for i, (s1, t1) in enumerate(section):
        for j in range(i + 1, len(section)):
            s2, t2 = section[j]
            if t1 <= t2:
                continue
            strands = list(section)
            strands[i] = (s1, t2)
            strands[j] = (s2, t1)
            resolved = make_section(strands)
            if inversions(resolved) == total - 1:
                terms.append(resolved)
    return terms

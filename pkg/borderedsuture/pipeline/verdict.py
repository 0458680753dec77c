"""Homology ranks with a cross-check between rank modes, and verdict reports."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Optional

from borderedsuture.config import ComputeSettings
from borderedsuture.constants import REPORT_SCHEMA
from borderedsuture.errors import BackendDisagreementError
from borderedsuture.io import canonical_json, checksum
from borderedsuture.structures import ChainComplex

logger = logging.getLogger("borderedsuture")

PROBABILISTIC = "probabilistic"
EXACT = "exact"

COMPRESSING_DISK = "compressing-disk"
BOUNDARY_PARALLEL = "boundary-parallel"
PAIRING = "pairing"
HOMOLOGY = "homology"

COMPRESSIBLE = "compressible"
INCOMPRESSIBLE = "incompressible"
PARTLY_BOUNDARY_PARALLEL = "partly-boundary-parallel"
NOT_BOUNDARY_PARALLEL = "not-boundary-parallel"


@dataclass(frozen=True)
class RankResult:
    """
    Homology rank of a complex in the requested mode.

    When the complex is small enough the other mode is run too, and
    `exact_rank`/`probabilistic_rank` both hold values.
    """

    rank: int
    mode: str
    seed: int
    dimension: int
    entries: int
    exact_rank: Optional[int] = None
    probabilistic_rank: Optional[int] = None

    @property
    def agreement(self) -> Optional[bool]:
        if self.exact_rank is None or self.probabilistic_rank is None:
            return None
        return self.exact_rank == self.probabilistic_rank


def complex_rank(c: ChainComplex, settings: ComputeSettings = ComputeSettings()) -> RankResult:
    """
    Rank of the homology of c, cross-checked in the other mode when
    len(c) <= settings.exact_max_dim.

    Raises:
        BackendDisagreementError: if the two modes give different ranks.
    """

    def run(mode: str) -> int:
        return c.homology_rank(
            mode=mode,
            seed=settings.seed,
            field_degree=settings.field_degree,
            repetitions=settings.repetitions,
        )

    ranks = {settings.mode: run(settings.mode)}
    if len(c) <= settings.exact_max_dim:
        other = EXACT if settings.mode == PROBABILISTIC else PROBABILISTIC
        ranks[other] = run(other)
        if ranks[other] != ranks[settings.mode]:
            raise BackendDisagreementError(
                f"Homology rank of {c!r} is {ranks[EXACT]} in exact mode but "
                f"{ranks[PROBABILISTIC]} in probabilistic mode (seed {settings.seed})"
            )
    else:
        logger.debug(
            f"{c!r} exceeds {settings.exact_max_dim}; no cross-check, seed {settings.seed}"
        )
    return RankResult(
        rank=ranks[settings.mode],
        mode=settings.mode,
        seed=settings.seed,
        dimension=len(c),
        entries=len(c.differential),
        exact_rank=ranks.get(EXACT),
        probabilistic_rank=ranks.get(PROBABILISTIC),
    )


@dataclass
class Verdict:
    """The outcome of one computation, with everything needed to audit it."""

    kind: str
    answer: Optional[str]
    result: RankResult
    certificate: dict[str, Any] = field(default_factory=dict)
    inputs: dict[str, str] = field(default_factory=dict)
    pieces: list[str] = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def rank(self) -> int:
        return self.result.rank

    def with_inputs(self, paths: Iterable[Path | str]) -> "Verdict":
        """Record the content hash of every input file."""
        for path in paths:
            self.inputs[str(path)] = checksum(path)
        return self

    def to_dict(self, timing: bool = False) -> dict:
        data = {
            "schema": REPORT_SCHEMA,
            "kind": self.kind,
            "answer": self.answer,
            "rank": self.result.rank,
            "mode": self.result.mode,
            "seed": self.result.seed,
            "exact_rank": self.result.exact_rank,
            "probabilistic_rank": self.result.probabilistic_rank,
            "agreement": self.result.agreement,
            "certificate": {
                "dimension": self.result.dimension,
                "entries": self.result.entries,
                **self.certificate,
            },
            "inputs": dict(self.inputs),
            "pieces": list(self.pieces),
        }
        if timing and self.elapsed is not None:
            data["timing"] = round(self.elapsed, 3)
        return data


def report(verdict: Verdict, timing: bool = False) -> str:
    """Canonical JSON; without timing the same inputs give byte-identical reports."""
    return canonical_json(verdict.to_dict(timing))


def homology(c: ChainComplex, settings: ComputeSettings = ComputeSettings()) -> Verdict:
    """A verdict without an answer: just the rank of H_*(c)."""
    return Verdict(kind=HOMOLOGY, answer=None, result=complex_rank(c, settings))

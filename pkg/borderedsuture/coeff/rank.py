"""Rank of matrices with Laurent-polynomial entries over F2(x1, ..., xn).

Two modes:

- probabilistic: evaluate every variable at a random nonzero element of
  GF(2^m) and eliminate over the finite field. The evaluated rank never
  exceeds the true rank; the maximum over several independent points is
  reported.
- exact: fraction-free (Bareiss) elimination over F2[x1, ..., xn].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from sympy import Poly

from borderedsuture import constants
from borderedsuture.coeff.frac import generators, laurent_to_poly
from borderedsuture.coeff.gf2m import GF2m
from borderedsuture.coeff.laurent import LaurentPolynomial

logger = logging.getLogger("borderedsuture")

Entries = Mapping[tuple[int, int], LaurentPolynomial]


@dataclass(frozen=True)
class EvalPoint:
    """One nonzero field element per variable, reproducible from the seed."""

    assignments: tuple[int, ...]
    seed: int


def draw_eval_points(
    nvars: int, field: GF2m, seed: int, repetitions: int
) -> list[EvalPoint]:
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(repetitions):
        values = rng.integers(1, field.order, size=nvars, dtype=np.uint64)
        points.append(EvalPoint(tuple(int(v) for v in values), seed))
    return points


def gf2_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over GF(2) by XOR elimination on a dense uint8 array."""
    R = np.asarray(rows, dtype=np.uint8) % 2
    if R.size == 0:
        return 0
    R = R.copy()
    m, n = R.shape
    pivot_row = 0
    for col in range(n):
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        below = np.nonzero(R[pivot_row + 1 :, col])[0] + pivot_row + 1
        R[below] ^= R[pivot_row]
        pivot_row += 1
        if pivot_row == m:
            break
    return pivot_row


def _field_rank(rows: list[dict[int, int]], field: GF2m) -> int:
    """Gaussian elimination over GF(2^m) on sparse rows (column -> value)."""
    rank = 0
    pending = [row for row in rows if row]
    while pending:
        row = pending.pop()
        col = min(row)
        inv = field.inverse(row[col])
        rank += 1
        survivors = []
        for other in pending:
            factor = other.get(col)
            if factor:
                scale = field.mul(factor, inv)
                for c, v in row.items():
                    value = other.get(c, 0) ^ field.mul(scale, v)
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
            if other:
                survivors.append(other)
        pending = survivors
    return rank


def _probabilistic_rank(
    entries: Entries, field_degree: int, seed: int, repetitions: int
) -> int:
    field = GF2m(field_degree)
    nvars = max((p.nvars() for p in entries.values()), default=0)
    best = 0
    for point in draw_eval_points(nvars, field, seed, repetitions):
        rows: dict[int, dict[int, int]] = {}
        for (i, j), p in entries.items():
            value = p.evaluate(field, point.assignments)
            if value:
                rows.setdefault(i, {})[j] = value
        best = max(best, _field_rank(list(rows.values()), field))
    return best


def _exact_rank(entries: Entries, nrows: int, ncols: int) -> int:
    """Bareiss elimination with column skipping over F2[x]."""
    nvars = max((p.nvars() for p in entries.values()), default=0)
    gens = generators(nvars)
    zero = Poly(0, *gens, modulus=2)
    M = [[zero] * ncols for _ in range(nrows)]
    # Multiplying a row by a monomial does not change the rank.
    by_row: dict[int, dict[int, LaurentPolynomial]] = {}
    for (i, j), p in entries.items():
        if p:
            by_row.setdefault(i, {})[j] = p
    for i, row in by_row.items():
        shift = [0] * len(gens)
        for p in row.values():
            for term in p.terms:
                for v, e in enumerate(term):
                    shift[v] = max(shift[v], -e)
        clearing = LaurentPolynomial.monomial(tuple(shift))
        for j, p in row.items():
            M[i][j], _ = laurent_to_poly(p * clearing, len(gens))

    rank = 0
    prev = Poly(1, *gens, modulus=2)
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if not M[r][col].is_zero), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        piv = M[rank][col]
        for r in range(rank + 1, nrows):
            lead = M[r][col]
            for c in range(col + 1, ncols):
                M[r][c] = (piv * M[r][c] - lead * M[rank][c]).exquo(prev)
            M[r][col] = zero
        prev = piv
        rank += 1
    return rank


def sparse_rank(
    entries: Entries,
    nrows: int,
    ncols: int,
    mode: str = constants.DEFAULT_MODE,
    seed: int = constants.DEFAULT_SEED,
    field_degree: int = constants.DEFAULT_FIELD_DEGREE,
    repetitions: int = constants.DEFAULT_REPETITIONS,
) -> int:
    """
    Rank of a sparse matrix given as {(row, col): entry}.

    Args:
        entries: Nonzero entries; zero polynomials are ignored.
        nrows: Number of rows.
        ncols: Number of columns.
        mode: "probabilistic" or "exact".
        seed: Seed for the evaluation points (probabilistic mode).
        field_degree: m for GF(2^m) (probabilistic mode).
        repetitions: Number of independent evaluation points.

    Returns:
        The rank over the fraction field.
    """
    entries = {k: v for k, v in entries.items() if v}
    if not entries:
        return 0
    if all(p.is_one() for p in entries.values()):
        dense = np.zeros((nrows, ncols), dtype=np.uint8)
        for i, j in entries:
            dense[i, j] = 1
        return gf2_rank(dense)
    if mode == "exact":
        return _exact_rank(entries, nrows, ncols)
    if mode != "probabilistic":
        raise ValueError(f"Unknown rank mode: {mode}")
    return _probabilistic_rank(entries, field_degree, seed, repetitions)


def rank_over_fraction_field(
    matrix: Sequence[Sequence[LaurentPolynomial]],
    mode: str = constants.DEFAULT_MODE,
    seed: int = constants.DEFAULT_SEED,
    field_degree: int = constants.DEFAULT_FIELD_DEGREE,
    repetitions: int = constants.DEFAULT_REPETITIONS,
) -> int:
    """Rank of a dense matrix of Laurent polynomials. An empty matrix has rank 0."""
    entries = {
        (i, j): p for i, row in enumerate(matrix) for j, p in enumerate(row) if p
    }
    nrows = len(matrix)
    ncols = max((len(row) for row in matrix), default=0)
    return sparse_rank(entries, nrows, ncols, mode, seed, field_degree, repetitions)

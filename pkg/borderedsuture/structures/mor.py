"""Chain complexes, morphism complexes between type D structures, and homology."""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Hashable, Iterable, Mapping

from borderedsuture import constants
from borderedsuture.coeff import LaurentPolynomial, sparse_rank
from borderedsuture.errors import InterfaceError, ValidationError
from borderedsuture.structures.typed import (
    ONE,
    TypeD,
    accumulate,
    generator_label,
    merge_coefficients,
)

logger = logging.getLogger("borderedsuture")


class ChainComplex:
    """
    A finite chain complex over F2 or F2(x1, ..., xn).

    `differential` maps (source, target) to the coefficient of target in
    d(source).
    """

    def __init__(
        self,
        basis: Iterable[Hashable],
        differential: Mapping[tuple, LaurentPolynomial],
        coefficients: str = "F2",
    ):
        self.basis = list(basis)
        self.differential = {k: v for k, v in differential.items() if v}
        self.coefficients = coefficients

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim {len(self.basis)}, {len(self.differential)} entries)"

    def __len__(self) -> int:
        return len(self.basis)

    @cached_property
    def index(self) -> dict:
        return {b: i for i, b in enumerate(self.basis)}

    @cached_property
    def _rows(self) -> dict:
        rows: dict = {}
        for (s, t), c in self.differential.items():
            rows.setdefault(s, []).append((t, c))
        return rows

    def d(self, b) -> dict:
        return dict(self._rows.get(b, []))

    def apply(self, vector: Mapping[Hashable, LaurentPolynomial]) -> dict:
        """d of a vector given as {basis element: coefficient}."""
        result: dict = {}
        for b, c in vector.items():
            for t, e in self._rows.get(b, []):
                accumulate(result, t, c * e)
        return result

    def matrix_entries(self) -> dict[tuple[int, int], LaurentPolynomial]:
        """Entries of the differential matrix, row = target index, column = source index."""
        index = self.index
        return {(index[t], index[s]): c for (s, t), c in self.differential.items()}

    def check(self) -> list[ValidationError]:
        """Diagnostics for d^2 != 0, one per offending basis element."""
        errors = []
        for b in self.basis:
            square = self.apply(self.d(b))
            if square:
                errors.append(
                    ValidationError(
                        f"d^2 does not vanish on {generator_label(b)}: "
                        f"{len(square)} surviving terms"
                    )
                )
        return errors

    def homology_rank(
        self,
        mode: str = constants.DEFAULT_MODE,
        seed: int = constants.DEFAULT_SEED,
        field_degree: int = constants.DEFAULT_FIELD_DEGREE,
        repetitions: int = constants.DEFAULT_REPETITIONS,
    ) -> int:
        """dim ker d - dim im d = n - 2 rank(d), since d^2 = 0."""
        n = len(self.basis)
        rank = sparse_rank(
            self.matrix_entries(), n, n, mode, seed, field_degree, repetitions
        )
        logger.debug(f"complex of dimension {n}: rank of d is {rank}")
        return n - 2 * rank


def homology_rank(
    c: ChainComplex,
    mode: str = constants.DEFAULT_MODE,
    seed: int = constants.DEFAULT_SEED,
    **kwargs,
) -> int:
    """Homology rank of a complex over its coefficient field."""
    return c.homology_rank(mode=mode, seed=seed, **kwargs)


class MorComplex(ChainComplex):
    """
    Mor(P, Q) for type D structures over the same algebra.

    A basis element (p, a, q) is the morphism sending p to a (x) q, for a
    basis element a with iota(p) a iota(q) = a.
    """

    def __init__(self, p: TypeD, q: TypeD):
        if p.algebra != q.algebra:
            raise InterfaceError(
                f"Mor({p.name}, {q.name}) needs both structures over the same algebra"
            )
        self.p = p
        self.q = q
        algebra = p.algebra
        basis = [
            (x, a, y)
            for x in p.generators
            for y in q.generators
            for a in algebra.basis_between(p.idempotent(x), q.idempotent(y))
        ]
        differential: dict = {}
        for x, a, y in basis:
            source = (x, a, y)
            for term in algebra.differential(a):
                accumulate(differential, (source, (x, term, y)), ONE)
            for arrow in q.outgoing(y):
                for term in algebra.multiply(a, arrow.label):
                    accumulate(differential, (source, (x, term, arrow.target)), arrow.scalar)
            for arrow in p.incoming(x):
                for term in algebra.multiply(arrow.label, a):
                    accumulate(differential, (source, (arrow.source, term, y)), arrow.scalar)
        super().__init__(
            basis, differential, merge_coefficients(p.coefficients, q.coefficients)
        )
        logger.debug(f"Mor({p.name}, {q.name}): {len(basis)} basis morphisms")

    def identity_cycle(self) -> dict:
        """The identity morphism, sum over x of (x, iota(x), x); needs P = Q."""
        if self.p != self.q:
            raise InterfaceError("The identity morphism needs Mor(P, P)")
        algebra = self.p.algebra
        return {
            (x, algebra.idempotent(key), x): ONE for x, key in self.p.generators.items()
        }


def mor_complex(p: TypeD, q: TypeD) -> MorComplex:
    return MorComplex(p, q)


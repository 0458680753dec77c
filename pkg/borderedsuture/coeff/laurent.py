"""Laurent polynomials over F2 in the variables x1, x2, ... (one per boundary segment)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence


def _trim(exponents: Iterable[int]) -> tuple[int, ...]:
    entries = list(exponents)
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)


def _add(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return _trim(a + b for a, b in zip_longest(u, v, fillvalue=0))


@dataclass(frozen=True)
class ExponentVector:
    """Integer vector of fixed length; supports live here."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if len(self) != len(other):
            raise ValueError(
                f"Exponent vectors of different lengths: {len(self)} and {len(other)}"
            )
        return ExponentVector(tuple(a + b for a, b in zip(self, other)))

    def __neg__(self) -> "ExponentVector":
        return ExponentVector(tuple(-a for a in self))

    @classmethod
    def zero(cls, length: int) -> "ExponentVector":
        return cls((0,) * length)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True, order=True)
class LaurentMonomial:
    """x1^e1 x2^e2 ... with trailing zero exponents dropped."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "exponents", _trim(self.exponents))

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(_add(self.exponents, other.exponents))

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial(tuple(-e for e in self.exponents))

    def is_one(self) -> bool:
        return not self.exponents

    def nvars(self) -> int:
        return len(self.exponents)

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        factors = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e != 0:
                factors.append(f"x{i}^{e}")
        return "*".join(factors)


class LaurentPolynomial:
    """
    An F2-linear combination of Laurent monomials.

    Stored as a frozenset of exponent tuples; addition is symmetric difference.
    Instances are immutable and hashable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Sequence[int] | LaurentMonomial] = ()):
        normalized: set[tuple[int, ...]] = set()
        for term in terms:
            key = term.exponents if isinstance(term, LaurentMonomial) else _trim(term)
            normalized ^= {key}
        self.terms = frozenset(normalized)

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls([()])

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def monomial(cls, exponents: Sequence[int] | LaurentMonomial) -> "LaurentPolynomial":
        return cls([exponents])

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        result = LaurentPolynomial()
        result.terms = self.terms ^ other.terms
        return result

    __sub__ = __add__

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentMonomial):
            other = LaurentPolynomial.monomial(other)
        return LaurentPolynomial(_add(u, v) for u in self.terms for v in other.terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        if other == 1:
            return self.terms == frozenset({()})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == frozenset({()})

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomials(self) -> list[LaurentMonomial]:
        return [LaurentMonomial(t) for t in sorted(self.terms)]

    def nvars(self) -> int:
        return max((len(t) for t in self.terms), default=0)

    def inverse(self) -> "LaurentPolynomial":
        """Inverse of a monomial; general polynomials are not units."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not invertible in the Laurent ring")
        (term,) = self.terms
        return LaurentPolynomial.monomial(tuple(-e for e in term))

    def evaluate(self, field, point: Sequence[int]) -> int:
        """Value in GF(2^m) with x_i set to point[i-1] (all nonzero)."""
        total = 0
        for term in self.terms:
            value = 1
            for var, e in enumerate(term):
                if e:
                    value = field.mul(value, field.pow(point[var], e))
            total ^= value
        return total

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in sorted(self.terms)]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "LaurentPolynomial":
        return cls(tuple(t) for t in data)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.monomials())

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


def nu(support: Sequence[int] | ExponentVector, length: int | None = None) -> LaurentMonomial:
    """
    Monomial x1^a1 ... xn^an of a support vector (a1, ..., an).

    Args:
        support: The exponent vector.
        length: Expected number of variables; checked when given.

    Returns:
        The LaurentMonomial with exactly those exponents.
    """
    entries = tuple(support)
    if length is not None and len(entries) != length:
        raise ValueError(f"Support of length {len(entries)}, expected {length}")
    return LaurentMonomial(entries)

"""Elements of the rational function field F2(x1, ..., xn)."""

from __future__ import annotations

from functools import lru_cache

from sympy import Poly, symbols

from borderedsuture.coeff.laurent import LaurentPolynomial


@lru_cache(maxsize=None)
def generators(nvars: int) -> tuple:
    """Symbols x1..xn (at least one, so constants still form a Poly)."""
    n = max(nvars, 1)
    return tuple(symbols(f"x1:{n + 1}"))


def to_poly(expr, nvars: int) -> Poly:
    return Poly(expr, *generators(nvars), modulus=2)


def laurent_to_poly(p: LaurentPolynomial, nvars: int) -> tuple[Poly, tuple[int, ...]]:
    """
    Clear negative exponents of a Laurent polynomial.

    Returns (q, shift) with p = q * x^(-shift) and q an honest polynomial.
    """
    n = max(nvars, p.nvars(), 1)
    shift = [0] * n
    for term in p.terms:
        for i, e in enumerate(term):
            if e < 0:
                shift[i] = max(shift[i], -e)
    terms = {}
    for term in p.terms:
        padded = list(term) + [0] * (n - len(term))
        terms[tuple(e + s for e, s in zip(padded, shift))] = 1
    gens = generators(n)
    if not terms:
        return Poly(0, *gens, modulus=2), tuple(shift)
    return Poly.from_dict(terms, *gens, modulus=2), tuple(shift)


def monomial_poly(exponents, nvars: int) -> Poly:
    n = max(nvars, 1)
    padded = tuple(exponents) + (0,) * (n - len(exponents))
    return Poly.from_dict({padded: 1}, *generators(n), modulus=2)


class FracScalar:
    """
    A quotient numerator/denominator of polynomials over F2.

    Equality is decided by cross-multiplication, so representations need not
    be reduced. `reduced()` divides out the gcd and is used in exact mode.
    """

    __slots__ = ("numerator", "denominator", "nvars")

    def __init__(self, numerator: Poly, denominator: Poly | None = None, nvars: int = 1):
        self.nvars = max(nvars, len(numerator.gens))
        gens = generators(self.nvars)
        if denominator is None:
            denominator = Poly(1, *gens, modulus=2)
        self.numerator = _lift(numerator, gens)
        self.denominator = _lift(denominator, gens)
        if self.denominator.is_zero:
            raise ZeroDivisionError("FracScalar with zero denominator")

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial, nvars: int = 1) -> "FracScalar":
        n = max(nvars, p.nvars(), 1)
        numerator, shift = laurent_to_poly(p, n)
        return cls(numerator, monomial_poly(shift, n), n)

    @classmethod
    def one(cls, nvars: int = 1) -> "FracScalar":
        return cls(to_poly(1, nvars), nvars=nvars)

    @classmethod
    def zero(cls, nvars: int = 1) -> "FracScalar":
        return cls(to_poly(0, nvars), nvars=nvars)

    def _common(self, other: "FracScalar") -> tuple["FracScalar", "FracScalar"]:
        if self.nvars == other.nvars:
            return self, other
        n = max(self.nvars, other.nvars)
        return (
            FracScalar(self.numerator, self.denominator, n),
            FracScalar(other.numerator, other.denominator, n),
        )

    def __add__(self, other: "FracScalar") -> "FracScalar":
        a, b = self._common(other)
        return FracScalar(
            a.numerator * b.denominator + b.numerator * a.denominator,
            a.denominator * b.denominator,
            a.nvars,
        )

    __sub__ = __add__

    def __neg__(self) -> "FracScalar":
        return self

    def __mul__(self, other: "FracScalar") -> "FracScalar":
        a, b = self._common(other)
        return FracScalar(
            a.numerator * b.numerator, a.denominator * b.denominator, a.nvars
        )

    def inverse(self) -> "FracScalar":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in F2(x)")
        return FracScalar(self.denominator, self.numerator, self.nvars)

    def __truediv__(self, other: "FracScalar") -> "FracScalar":
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracScalar):
            return NotImplemented
        a, b = self._common(other)
        return a.numerator * b.denominator == b.numerator * a.denominator

    def __hash__(self) -> int:
        reduced = self.reduced()
        return hash((reduced.numerator.as_expr(), reduced.denominator.as_expr()))

    def reduced(self) -> "FracScalar":
        g = self.numerator.gcd(self.denominator)
        return FracScalar(
            self.numerator.exquo(g), self.denominator.exquo(g), self.nvars
        )

    def __repr__(self) -> str:
        return f"FracScalar(({self.numerator.as_expr()})/({self.denominator.as_expr()}))"


def _lift(p: Poly, gens: tuple) -> Poly:
    if p.gens == gens:
        return p
    return Poly(p.as_expr(), *gens, modulus=2)

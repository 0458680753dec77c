"""Arithmetic in the binary extension fields GF(2^m), 1 <= m <= 64.

Elements are Python ints whose bits are polynomial coefficients over GF(2).
"""

from __future__ import annotations

import logging
from functools import lru_cache

logger = logging.getLogger("borderedsuture")

# Standard irreducible polynomials for small degrees (bit i = coefficient of x^i).
_IRREDUCIBLE: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
}

MAX_DEGREE = 64


def _degree(f: int) -> int:
    return f.bit_length() - 1


def _polymod(a: int, f: int) -> int:
    df = _degree(f)
    while a and _degree(a) >= df:
        a ^= f << (_degree(a) - df)
    return a


def _clmul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def _mulmod(a: int, b: int, f: int) -> int:
    return _polymod(_clmul(a, b), f)


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _x_power_2k(k: int, f: int) -> int:
    """x^(2^k) mod f by repeated squaring."""
    x = _polymod(0b10, f)
    for _ in range(k):
        x = _mulmod(x, x, f)
    return x


def is_irreducible(f: int) -> bool:
    """Rabin's irreducibility test over GF(2)."""
    m = _degree(f)
    if m < 1:
        return False
    if m == 1:
        return True
    if _x_power_2k(m, f) != _polymod(0b10, f):
        return False
    for q in _prime_factors(m):
        h = _x_power_2k(m // q, f) ^ 0b10
        if _polygcd(f, _polymod(h, f)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def irreducible_polynomial(m: int) -> int:
    """
    The defining polynomial used for GF(2^m).

    Small degrees use the standard table; larger ones take the first
    irreducible trinomial x^m + x^k + 1, else the first pentanomial, in
    lexicographic order of the middle exponents.
    """
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"Unsupported extension degree m={m}; must be in [1..64]")
    if m in _IRREDUCIBLE:
        return _IRREDUCIBLE[m]
    top = (1 << m) | 1
    for k in range(1, m):
        f = top | (1 << k)
        if is_irreducible(f):
            logger.debug(f"GF(2^{m}) defined by trinomial x^{m}+x^{k}+1")
            return f
    for k3 in range(3, m):
        for k2 in range(2, k3):
            for k1 in range(1, k2):
                f = top | (1 << k3) | (1 << k2) | (1 << k1)
                if is_irreducible(f):
                    logger.debug(
                        f"GF(2^{m}) defined by pentanomial x^{m}+x^{k3}+x^{k2}+x^{k1}+1"
                    )
                    return f
    raise ValueError(f"No irreducible polynomial found for m={m}")  # pragma: no cover


class GF2m:
    """Galois field GF(2^m).

    Parameters
    ----------
    m : int
        Extension degree, in [1..64].
    """

    def __init__(self, m: int):
        self.m = m
        self.modulus = irreducible_polynomial(m)
        self.order = 1 << m

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, modulus={self.modulus:#x})"

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _mulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inverse(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ValueError("Inverse of zero in GF(2^m)")
        # a^(2^m - 2) = a^-1 on the multiplicative group.
        return self.pow(a, self.order - 2)

    def elements(self):
        return range(self.order)


def gf2m_arith(m: int) -> GF2m:
    return GF2m(m)

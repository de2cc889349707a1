"""Exact integer and rational primitives shared by every other module.

Rationals are plain :class:`fractions.Fraction` values (always reduced,
positive denominator).  Integers are Python ints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

__all__ = [
    "Fraction",
    "binom",
    "binom_product",
    "isqrt_exact",
    "primes_upto",
    "triangular_inverse",
    "vandermonde_check",
]


# below this k the plain multiplicative loop wins
_SMALL_K = 300


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside ``0 <= k <= n``.

    Small k uses ``math.comb``; large k multiplies out the prime
    factorisation (Legendre exponents) with a balanced product tree, which
    keeps C(2*10**6, 10**6) to well under a second.  Raises ValueError for
    negative ``n``.
    """
    if n < 0:
        raise ValueError(f"binom: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    if k < _SMALL_K:
        return math.comb(n, k)
    factors = []
    for p in primes_upto(n):
        e = _legendre(n, p) - _legendre(k, p) - _legendre(n - k, p)
        if e:
            factors.append(p ** e if e > 1 else p)
    return _product(factors)


def _legendre(n: int, p: int) -> int:
    """Exponent of p in n!."""
    e = 0
    while n:
        n //= p
        e += n
    return e


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _product(xs: list[int]) -> int:
    while len(xs) > 1:
        if len(xs) % 2:
            xs.append(1)
        xs = [xs[i] * xs[i + 1] for i in range(0, len(xs), 2)]
    return xs[0] if xs else 1


def binom_product(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula with a running gcd reduction.

    Slower than :func:`binom`; kept as an independent route for checks.
    """
    if n < 0:
        raise ValueError(f"binom_product: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    num, den = 1, 1
    for j in range(1, k + 1):
        num *= n - k + j
        den *= j
        g = math.gcd(num, den)
        num //= g
        den //= g
    assert den == 1
    return num


def isqrt_exact(m: int) -> Optional[int]:
    """Return ``s`` with ``s * s == m``, or None when ``m`` is not a square."""
    if m < 0:
        return None
    s = math.isqrt(m)
    return s if s * s == m else None


def triangular_inverse(t: int) -> Optional[int]:
    """Return ``d >= 1`` with ``d * (d - 1) / 2 == t``, or None.

    For ``t == 0`` the answer is 1 (the smaller of the two solutions 0, 1
    is excluded by ``d >= 1``).
    """
    if t < 0:
        raise ValueError(f"triangular_inverse: t must be non-negative, got {t}")
    s = isqrt_exact(1 + 8 * t)
    if s is None:
        return None
    # s is odd because s^2 = 1 (mod 8)
    return (1 + s) // 2


def vandermonde_check(m: int, a: int, b: int) -> bool:
    """Check sum_{j<=min(a,b)} C(m, b-j) C(a, j) == C(m+a, b)."""
    if min(m, a, b) < 0:
        raise ValueError("vandermonde_check: arguments must be non-negative")
    lhs = sum(binom(m, b - j) * binom(a, j) for j in range(min(a, b) + 1))
    return lhs == binom(m + a, b)

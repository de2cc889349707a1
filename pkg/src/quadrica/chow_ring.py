"""Truncated class polynomials and numeric data of complete intersections.

A smooth variety Y of dimension k enters every formula in this package only
through its degree and the integers H^(k-i) . s_i, where s_i is the i-th
Segre class and H the hyperplane class.  Throughout, the total Segre class
is the inverse of the total Chern class of the tangent bundle; for a
complete intersection of multidegree (e_1, ..., e_s) in P^m this is

    s(Y) = prod_j (1 + e_j h) / (1 + h)^(m + 1)    (truncated at h^(k+1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from .exact_arith import binom


@dataclass(frozen=True)
class TruncatedClassPolynomial:
    """Integer polynomial in h modulo h^(order+1)."""

    coefficients: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) > self.order + 1:
            coeffs = coeffs[: self.order + 1]
        coeffs = coeffs + (0,) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedClassPolynomial":
        return cls((1,), order)

    @classmethod
    def linear(cls, a: int, order: int) -> "TruncatedClassPolynomial":
        """The class 1 + a*h."""
        return cls((1, a), order)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __mul__(self, other: "TruncatedClassPolynomial") -> "TruncatedClassPolynomial":
        return truncated_product(self, other)

    def __pow__(self, e: int) -> "TruncatedClassPolynomial":
        if e < 0:
            return truncated_inverse(self) ** (-e)
        result = TruncatedClassPolynomial.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "TruncatedClassPolynomial":
        return truncated_inverse(self)


def truncated_product(p: TruncatedClassPolynomial,
                      q: TruncatedClassPolynomial) -> TruncatedClassPolynomial:
    """Product of two classes, dropping every term of degree > order."""
    if p.order != q.order:
        raise ValueError(f"truncation orders differ: {p.order} != {q.order}")
    k = p.order
    out = [0] * (k + 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j in range(k + 1 - i):
            out[i + j] += a * q.coefficients[j]
    return TruncatedClassPolynomial(tuple(out), k)


def truncated_inverse(p: TruncatedClassPolynomial) -> TruncatedClassPolynomial:
    """Multiplicative inverse of a class with constant term 1."""
    if p.coefficients[0] != 1:
        raise ValueError("only classes with constant term 1 are invertible over Z")
    k = p.order
    inv = [1] + [0] * k
    for n in range(1, k + 1):
        inv[n] = -sum(p.coefficients[j] * inv[n - j] for j in range(1, n + 1))
    return TruncatedClassPolynomial(tuple(inv), k)


@dataclass(frozen=True)
class VarietyNumerics:
    """Numeric avatar of a smooth projective variety of dimension ``dim``.

    ``segre_numbers[i]`` is the integer H^(dim-i) . s_i, so entry 0 is the
    degree.  ``sectional_genus`` is the genus of a general curve section
    (only meaningful for ``dim >= 1``).
    """

    dim: int
    degree: int
    segre_numbers: tuple[int, ...]
    sectional_genus: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "segre_numbers", tuple(int(s) for s in self.segre_numbers))
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(self.segre_numbers) != self.dim + 1:
            raise ValueError(
                f"expected {self.dim + 1} Segre numbers, got {len(self.segre_numbers)}")
        if self.segre_numbers[0] != self.degree:
            raise ValueError("segre_numbers[0] must equal the degree")


def complete_intersection_numerics(ambient_dim: int, degrees: Sequence[int]) -> VarietyNumerics:
    """Numerics of a smooth complete intersection of the given multidegree in P^m."""
    m = ambient_dim
    degrees = [int(e) for e in degrees]
    s = len(degrees)
    if m < 0:
        raise ValueError("ambient dimension must be non-negative")
    if s > m:
        raise ValueError(f"{s} hypersurfaces cannot cut a variety out of P^{m}")
    if any(e < 1 for e in degrees):
        raise ValueError("hypersurface degrees must be >= 1")
    k = m - s
    delta = prod(degrees)

    total = TruncatedClassPolynomial.one(k)
    for e in degrees:
        total = total * TruncatedClassPolynomial.linear(e, k)
    total = total * TruncatedClassPolynomial.linear(1, k) ** (-(m + 1))
    segre_numbers = tuple(delta * c for c in total.coefficients)

    genus = None
    if k >= 1:
        # the curve section is a complete intersection of the same degrees
        # in P^(s+1); adjunction gives 2g - 2 = delta * (sum e - s - 2)
        twice = delta * (sum(degrees) - s - 2)
        genus = 1 + twice // 2
    return VarietyNumerics(k, delta, segre_numbers, genus)


def quadric_numerics(k: int) -> VarietyNumerics:
    """A smooth k-dimensional quadric in P^(k+1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return complete_intersection_numerics(k + 1, [2])


def projective_space_numerics(k: int) -> VarietyNumerics:
    """P^k in its own embedding: s = (1+h)^-(k+1)."""
    return VarietyNumerics(k, 1, tuple((-1) ** i * binom(k + i, i) for i in range(k + 1)),
                           0 if k >= 1 else None)

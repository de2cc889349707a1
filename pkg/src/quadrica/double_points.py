"""Apparent double points and the 2-Veronese double-point count.

``b_vector`` gives, for each i, the number of double points of a generic
projection to P^(2i) of a general i-dimensional linear section.  The count
for the 2-Veronese re-embedding is computed two ways:

* ``veronese_double_points_direct`` applies the double-point formula to
  v_2(Y), where hyperplane powers pick up a factor 2^(k-i);
* ``veronese_double_points_via_b`` uses sum_i C(2k+1, k-i) b_i.

The two routes share nothing beyond the input numerics, so agreement is a
real check of the identity relating them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .chow_ring import VarietyNumerics
from .exact_arith import binom


class OddNumeratorError(ValueError):
    """A double-point count came out half-integral: the Segre data is inconsistent."""


@dataclass(frozen=True)
class BVector:
    """Apparent-double-point vector (b_0, ..., b_k)."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise ValueError("a b-vector has at least the entry b_0")

    @property
    def dim(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def _half(numerator: int, what: str) -> int:
    if numerator % 2:
        raise OddNumeratorError(f"{what}: numerator {numerator} is odd")
    return numerator // 2


def section_segre_numbers(v: VarietyNumerics, q: int) -> list[int]:
    """Segre numbers of a general linear section of codimension ``q``.

    Entry i is H^(k-q-i) . s_i(Y_(k-q)) = sum_j C(q, j) * segre_numbers[i-j].
    """
    k = v.dim
    if not 0 <= q <= k:
        raise ValueError(f"section codimension {q} outside 0..{k}")
    s = v.segre_numbers
    out = [sum(binom(q, j) * s[i - j] for j in range(min(q, i) + 1))
           for i in range(k - q + 1)]
    assert out[0] == v.degree
    return out


def b_vector(v: VarietyNumerics) -> BVector:
    """Apparent double points of Y and of all its general linear sections.

    When the sectional genus is known, the curve entry is checked against
    b_1 = C(delta-1, 2) - g.
    """
    k, delta = v.dim, v.degree
    b = [0] * (k + 1)
    for q in range(k + 1):
        j = k - q
        sec = section_segre_numbers(v, q)
        total = sum(binom(2 * j + 1, j - i) * sec[i] for i in range(j + 1))
        b[j] = _half(delta * delta - total, f"b_{j}")
    if b[0] != binom(delta, 2):
        raise OddNumeratorError(f"b_0 = {b[0]} differs from C({delta}, 2)")
    if k >= 1 and v.sectional_genus is not None:
        expected = binom(delta - 1, 2) - v.sectional_genus
        if b[1] != expected:
            raise ValueError(
                f"b_1 = {b[1]} inconsistent with sectional genus {v.sectional_genus} "
                f"(expected {expected})")
    return BVector(tuple(b))


def veronese_double_points_direct(v: VarietyNumerics) -> int:
    """Double points of a generic projection of v_2(Y) to P^(2k), from Segre numbers."""
    k, delta = v.dim, v.degree
    s = v.segre_numbers
    total = sum(binom(2 * k + 1, k - i) * 2 ** (k - i) * s[i] for i in range(k + 1))
    return _half(4 ** k * delta * delta - total, "Delta[v_2(Y)]")


def veronese_weights(k: int) -> list[int]:
    """Weights C(2k+1, k-i), i = 0..k, multiplying b_i."""
    return [binom(2 * k + 1, k - i) for i in range(k + 1)]


def veronese_double_points_from_b(b: Sequence[int]) -> int:
    k = len(b) - 1
    return sum(w * bi for w, bi in zip(veronese_weights(k), b))


def veronese_double_points_via_b(v: VarietyNumerics) -> int:
    """Double points of v_2(Y) as sum_i C(2k+1, k-i) b_i."""
    return veronese_double_points_from_b(b_vector(v).values)


def coefficient_identity_check(k: int, i: int, q: int) -> bool:
    """C(2k+1, k-i) C(k-i, q) == C(2k+1, q) C(2k-q+1, k-q-i)."""
    if not (0 <= i <= k and 1 <= q <= k):
        raise ValueError(f"need 0 <= i <= k and 1 <= q <= k, got k={k}, i={i}, q={q}")
    lhs = binom(2 * k + 1, k - i) * binom(k - i, q)
    rhs = binom(2 * k + 1, q) * binom(2 * k - q + 1, k - q - i)
    return lhs == rhs

"""Schubert cycles on the Grassmannian G(1, r) of lines in P^r.

Omega(p, q) is the class of lines lying in a fixed q-plane and meeting a
fixed p-plane inside it; it has dimension p + q - 1.  Only the duality
pairing is implemented: Omega(p, q) and Omega(p', q') of complementary
dimension pair to 1 exactly when p + q' = r and q + p' = r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .double_points import BVector


@dataclass(frozen=True)
class SchubertCycle:
    """Integer combination of classes Omega(p, q), all of dimension ``dim``."""

    r: int
    dim: int
    terms: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("G(1, r) needs r >= 1")
        if not 0 <= self.dim <= 2 * self.r - 2:
            raise ValueError(f"dimension {self.dim} outside 0..{2 * self.r - 2}")
        clean = {}
        for (p, q), coeff in self.terms.items():
            if not 0 <= p < q <= self.r:
                raise ValueError(f"Omega({p}, {q}) is not a Schubert cycle of G(1, {self.r})")
            if p + q - 1 != self.dim:
                raise ValueError(
                    f"Omega({p}, {q}) has dimension {p + q - 1}, cycle has dimension {self.dim}")
            if coeff:
                clean[(p, q)] = int(coeff)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def basis(cls, r: int, p: int, q: int) -> "SchubertCycle":
        return cls(r, p + q - 1, {(p, q): 1})

    def _check_compatible(self, other: "SchubertCycle"):
        if self.r != other.r or self.dim != other.dim:
            raise ValueError("cycles live in different groups")

    def __add__(self, other: "SchubertCycle") -> "SchubertCycle":
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return SchubertCycle(self.r, self.dim, terms)

    def __rmul__(self, scalar: int) -> "SchubertCycle":
        return SchubertCycle(self.r, self.dim, {k: scalar * c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*Omega({p},{q})" for (p, q), c in self.terms.items())


def secant_cycle(a: BVector | Sequence[int], r: int) -> SchubertCycle:
    """Class of the secant lines of an h-dimensional X in P^r.

    The coefficient of Omega(i, 2h+1-i) is a_(h-i).  Classes with
    2h+1-i > r do not exist and are skipped, which is what happens for the
    larger of two complementary varieties.
    """
    a = tuple(a)
    h = len(a) - 1
    if h < 0 or h > r - 1:
        raise ValueError(f"a {h}-dimensional variety has no secant cycle in G(1, {r})")
    terms = {}
    for i in range(max(0, 2 * h + 1 - r), h + 1):
        terms[(i, 2 * h + 1 - i)] = a[h - i]
    return SchubertCycle(r, 2 * h, terms)


def basis_pairing(r: int, pq: tuple[int, int], pq2: tuple[int, int]) -> int:
    (p, q), (p2, q2) = pq, pq2
    return 1 if p + q2 == r and q + p2 == r else 0


def pairing(a: SchubertCycle, b: SchubertCycle) -> int:
    """Intersection number of two cycles of complementary dimension."""
    if a.r != b.r:
        raise ValueError("cycles in different Grassmannians")
    if a.dim + b.dim != 2 * a.r - 2:
        raise ValueError(
            f"dimensions {a.dim} + {b.dim} are not complementary in G(1, {a.r})")
    return sum(ca * cb * basis_pairing(a.r, ka, kb)
               for ka, ca in a.terms.items() for kb, cb in b.terms.items())


def common_secant_count(a: BVector | Sequence[int], b: BVector | Sequence[int], r: int) -> int:
    """Number of lines secant to both X (dim h) and Y (dim k), h + k = r - 1."""
    a, b = tuple(a), tuple(b)
    h, k = len(a) - 1, len(b) - 1
    if h + k != r - 1:
        raise ValueError(f"need h + k = r - 1, got h={h}, k={k}, r={r}")
    return sum(a[i] * b[i] for i in range(min(h, k) + 1))

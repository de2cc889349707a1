"""Restriction of a linear system of quadrics to a line.

A line L = <P, Q> is parametrised as x*P + y*Q; each quadric pulls back to
a binary quadric lam*x^2 + mu*xy + nu*y^2.  The span of these binary forms
decides what the rational map does on L:

    rank 0                        L lies in the base locus
    rank 1                        L is contracted (secant, or tangent if the
                                  single form has a double root)
    rank 2, common linear factor  L meets the base locus once, map is an
                                  isomorphism onto a line
    rank 2, no common factor      incomplete base-point-free pencil: a
                                  double cover of a line
    rank 3                        complete system: the conic embedding

Everything is exact over Q; distinct versus repeated roots is decided by the
discriminant being nonzero (roots are counted over C).
"""

from __future__ import annotations

import enum
import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence


class LineCase(enum.Enum):
    CONTAINED_IN_X = "contained_in_x"
    CONTRACTED_SECANT = "contracted_two_distinct_points"
    CONTRACTED_TANGENT = "contracted_tangent_double_point"
    MEETS_AT_ONE_POINT = "meets_at_one_point"
    VERONESE_EMBEDDING = "veronese_embedding"
    DOUBLE_COVER = "double_cover"

    @property
    def roman(self) -> str:
        return _ROMAN[self]


_ROMAN = {
    LineCase.CONTAINED_IN_X: "i",
    LineCase.CONTRACTED_SECANT: "ii",
    LineCase.CONTRACTED_TANGENT: "ii'",
    LineCase.MEETS_AT_ONE_POINT: "iii",
    LineCase.VERONESE_EMBEDDING: "iv",
    LineCase.DOUBLE_COVER: "v",
}


def _fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or strings")
    return Fraction(value)


@dataclass(frozen=True)
class QuadraticForm:
    """Quadric on P^r given by its symmetric (r+1) x (r+1) matrix."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_fraction(x) for x in row) for row in self.matrix)
        n = len(rows)
        if n < 2 or any(len(row) != n for row in rows):
            raise ValueError("quadratic form needs a square matrix of size >= 2")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "matrix", rows)

    @property
    def r(self) -> int:
        return len(self.matrix) - 1

    @classmethod
    def from_upper(cls, r: int, entries: Iterable[tuple[int, int, object]]) -> "QuadraticForm":
        """Build from (i, j, a_ij) triples of the upper triangle of the matrix."""
        m = [[Fraction(0)] * (r + 1) for _ in range(r + 1)]
        for i, j, c in entries:
            i, j = int(i), int(j)
            if not (0 <= i <= j <= r):
                raise ValueError(f"entry ({i}, {j}) outside the upper triangle of P^{r}")
            m[i][j] = m[j][i] = _fraction(c)
        return cls(tuple(tuple(row) for row in m))

    @classmethod
    def from_monomials(cls, r: int, coefficients: dict[tuple[int, int], object]) -> "QuadraticForm":
        """Build from polynomial coefficients, {(i, j): c} meaning c * x_i * x_j."""
        m = [[Fraction(0)] * (r + 1) for _ in range(r + 1)]
        for (i, j), c in coefficients.items():
            c = _fraction(c)
            if i == j:
                m[i][i] += c
            else:
                m[i][j] += c / 2
                m[j][i] += c / 2
        return cls(tuple(tuple(row) for row in m))

    def bilinear(self, p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
        return sum((p[i] * self.matrix[i][j] * q[j]
                    for i in range(len(p)) for j in range(len(q))
                    if self.matrix[i][j]), Fraction(0))

    def __call__(self, p: Sequence) -> Fraction:
        p = [_fraction(x) for x in p]
        return self.bilinear(p, p)

    def upper_entries(self) -> list[tuple[int, int, Fraction]]:
        n = len(self.matrix)
        return [(i, j, self.matrix[i][j]) for i in range(n) for j in range(i, n)
                if self.matrix[i][j]]


BinaryQuadric = tuple[Fraction, Fraction, Fraction]


def _point(p: Sequence, r: int) -> list[Fraction]:
    pt = [_fraction(x) for x in p]
    if len(pt) != r + 1:
        raise ValueError(f"point {p} does not have {r + 1} coordinates")
    if not any(pt):
        raise ValueError("the zero vector is not a projective point")
    return pt


def projectively_equal(p: Sequence[Fraction], q: Sequence[Fraction]) -> bool:
    """True when p and q are proportional (span a single point)."""
    n = len(p)
    return all(p[i] * q[j] == p[j] * q[i] for i in range(n) for j in range(i + 1, n))


def restrict_to_line(forms: Sequence[QuadraticForm], p: Sequence, q: Sequence) -> list[BinaryQuadric]:
    """Pull each form back along x*P + y*Q: (f(P,P), 2 f(P,Q), f(Q,Q))."""
    if not forms:
        return []
    r = forms[0].r
    if any(f.r != r for f in forms):
        raise ValueError("forms live on different projective spaces")
    P, Q = _point(p, r), _point(q, r)
    if projectively_equal(P, Q):
        raise ValueError("P and Q are the same projective point")
    return [(f.bilinear(P, P), 2 * f.bilinear(P, Q), f.bilinear(Q, Q)) for f in forms]


def row_reduce(rows: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon basis of the span of ``rows``."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        v = [Fraction(x) for x in row]
        for b, piv in zip(basis, pivots):
            if v[piv]:
                c = v[piv]
                v = [x - c * y for x, y in zip(v, b)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        v = [x / v[lead] for x in v]
        for idx, (b, piv) in enumerate(zip(basis, pivots)):
            if b[lead]:
                c = b[lead]
                basis[idx] = [x - c * y for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order]


def discriminant(f: BinaryQuadric) -> Fraction:
    lam, mu, nu = f
    return mu * mu - 4 * lam * nu


def resultant(f: BinaryQuadric, g: BinaryQuadric) -> Fraction:
    """Resultant of two binary quadrics; zero iff they share a root over C."""
    a0, a1, a2 = f
    b0, b1, b2 = g
    return (a0 * b2 - a2 * b0) ** 2 - (a0 * b1 - a1 * b0) * (a1 * b2 - a2 * b1)


def common_factor_degree(basis: Sequence[BinaryQuadric]) -> int:
    """Degree of the gcd of a linearly independent family of binary quadrics."""
    if not basis:
        return 2  # the zero system vanishes everywhere
    if len(basis) == 1:
        return 2
    if len(basis) == 2:
        return 1 if resultant(basis[0], basis[1]) == 0 else 0
    return 0


def classify(restricted: Sequence[BinaryQuadric]) -> LineCase:
    """Case of the restricted system on a line (see module docstring)."""
    basis = [tuple(b) for b in row_reduce(restricted)]
    sigma = len(basis)
    if sigma == 0:
        return LineCase.CONTAINED_IN_X
    if sigma == 1:
        if discriminant(basis[0]) != 0:
            return LineCase.CONTRACTED_SECANT
        return LineCase.CONTRACTED_TANGENT
    if sigma == 2:
        if common_factor_degree(basis) == 1:
            return LineCase.MEETS_AT_ONE_POINT
        return LineCase.DOUBLE_COVER
    return LineCase.VERONESE_EMBEDDING


def classify_line(forms: Sequence[QuadraticForm], p: Sequence, q: Sequence) -> LineCase:
    return classify(restrict_to_line(forms, p, q))


@dataclass
class LineSample:
    trials: int
    counts: Counter

    @property
    def double_cover_found(self) -> bool:
        return self.counts.get(LineCase.DOUBLE_COVER, 0) > 0

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "counts": {case.value: self.counts.get(case, 0) for case in LineCase},
            "double_cover_found": self.double_cover_found,
        }


def random_line(rng: random.Random, r: int, height: int) -> tuple[list[int], list[int]]:
    """Two distinct projective points with integer coordinates in [-height, height]."""
    while True:
        p = [rng.randint(-height, height) for _ in range(r + 1)]
        q = [rng.randint(-height, height) for _ in range(r + 1)]
        if any(p) and any(q) and not projectively_equal(p, q):
            return p, q


def sample_lines(forms: Sequence[QuadraticForm], trials: int, seed: int,
                 height: int = 3) -> LineSample:
    """Classify ``trials`` random lines; deterministic for a given seed.

    Only an existence probe for double-cover lines: special lines form a
    proper subvariety of G(1, r), so small ``height`` makes them visible.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if height < 1:
        raise ValueError("height must be >= 1")
    if not forms:
        raise ValueError("need at least one quadratic form")
    rng = random.Random(seed)
    r = forms[0].r
    counts: Counter = Counter()
    for _ in range(trials):
        p, q = random_line(rng, r, height)
        counts[classify_line(forms, p, q)] += 1
    return LineSample(trials, counts)


# forms file: {"r": 4, "forms": [[[i, j, "a_ij"], ...], ...]}

def load_forms(path: str | Path) -> list[QuadraticForm]:
    with open(path) as fh:
        doc = json.load(fh)
    return forms_from_json(doc)


def forms_from_json(doc: dict) -> list[QuadraticForm]:
    try:
        r = int(doc["r"])
        raw = doc["forms"]
    except (KeyError, TypeError) as exc:
        raise ValueError("forms document needs keys 'r' and 'forms'") from exc
    return [QuadraticForm.from_upper(r, [tuple(t) for t in form]) for form in raw]


def forms_to_json(forms: Sequence[QuadraticForm]) -> dict:
    return {
        "r": forms[0].r,
        "forms": [[[i, j, str(c)] for i, j, c in f.upper_entries()] for f in forms],
    }


def complete_system(r: int) -> list[QuadraticForm]:
    """All monomials x_i x_j on P^r."""
    return [QuadraticForm.from_monomials(r, {(i, j): 1})
            for i in range(r + 1) for j in range(i, r + 1)]


def double_cover_example() -> list[QuadraticForm]:
    """(F0 : F1 : F2 : wx : wy : wz : wu) on P^4 with coordinates (x:y:z:u:w).

    F0 = x^2 - u^2, F1 = y^2 - u^2, F2 = z^2 - u^2 meet in the 8 reduced
    points (+-1 : +-1 : +-1 : 1 : 0); the base locus adds (0:0:0:0:1).
    """
    x, y, z, u, w = range(5)
    F = [{(x, x): 1, (u, u): -1}, {(y, y): 1, (u, u): -1}, {(z, z): 1, (u, u): -1}]
    W = [{(v, w): 1} for v in (x, y, z, u)]
    return [QuadraticForm.from_monomials(4, mono) for mono in F + W]

"""Degree bounds for schemes cut out by quadrics, and their equality cases.

Notation: X in P^r has degree d, dimension n and codimension c = r - n;
alpha + 1 is the number of independent quadrics in the defining system.
For a variety with few double-cover lines (dim W <= 2n + 1) one has

    alpha >= 2c - 2   and   C(d, 2) <= C(2c-1, c-1),

with equality iff alpha = 2c - 2 once dim W <= 2n.  Verdicts are exact;
floating point only appears in :func:`asymptotic_table`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .exact_arith import binom, triangular_inverse

# hypotheses the caller may vouch for; none of them can be checked here
ASSUMPTION_TAGS = ("dimW<=2n+1", "dimW<=2n", "K2", "N2", "N2p", "Np",
                   "reduced_codim0", "smooth_integral_codim1")


class Regime(enum.Enum):
    METHOD_SILENT = "method_silent"   # alpha + 1 < 2c - 1
    OUR_WINDOW = "our_window"
    ZAK_WINDOW = "zak_window"


@dataclass(frozen=True)
class SchemeDescriptor:
    d: int
    n: int
    r: int
    alpha: Optional[int] = None
    g: Optional[int] = None
    h0: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got {self.d}")
        if self.n < 0:
            raise ValueError(f"dimension must be >= 0, got {self.n}")
        if self.r - self.n < 2:
            raise ValueError(f"codimension c = r - n = {self.r - self.n} must be >= 2")
        if self.p is not None and self.p < 2:
            raise ValueError(f"p must be >= 2, got {self.p}")

    @property
    def c(self) -> int:
        return self.r - self.n

    @classmethod
    def from_codim(cls, d: int, c: int, **kw) -> "SchemeDescriptor":
        """Descriptor of a curve (n = 1) of codimension c, as used for curve sections."""
        return cls(d=d, n=1, r=c + 1, **kw)


@dataclass
class BoundReport:
    """Verdicts for one descriptor.  ``None`` means "not evaluated"."""

    d: int
    c: int
    lhs: int
    rhs: int
    main_bound_ok: bool
    equality: bool
    alpha_lower_ok: Optional[bool] = None
    equality_iff_alpha: Optional[bool] = None
    np_bound_ok: Optional[bool] = None
    h0_lower_ok: Optional[bool] = None
    classification_hit: Optional[tuple[int, int, int]] = None
    regime: Optional[Regime] = None
    assumptions: tuple[str, ...] = ()
    messages: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        checks = (self.main_bound_ok, self.alpha_lower_ok, self.equality_iff_alpha,
                  self.np_bound_ok, self.h0_lower_ok)
        return all(v is not False for v in checks)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["regime"] = self.regime.value if self.regime else None
        out["classification_hit"] = (list(self.classification_hit)
                                     if self.classification_hit else None)
        out["assumptions"] = list(self.assumptions)
        out["all_hold"] = self.all_hold
        return out


def central_value(c: int) -> int:
    """C(2c-1, c-1), the right-hand side of the main bound."""
    return binom(2 * c - 1, c - 1)


def castelnuovo_max_genus(d: int, c: int) -> Fraction:
    """Right-hand side (d-1)^2 / (2c) + (d-1)/2 of Castelnuovo's inequality in P^(c+1)."""
    if d < 2 or c < 2:
        raise ValueError("castelnuovo_max_genus needs d >= 2 and c >= 2")
    return Fraction((d - 1) ** 2, 2 * c) + Fraction(d - 1, 2)


def equality_genus(d: int, c: int) -> int:
    """Sectional genus forced by C(d,2) = C(2c-1,c-1): C(d-1,2) - C(2c-1,c-2)."""
    return binom(d - 1, 2) - binom(2 * c - 1, c - 2)


def admissible_equality_case(d: int, c: int, g: int) -> bool:
    """Whether (d, c, g) survives as an equality case with smooth integral curve section."""
    if binom(d, 2) != central_value(c) or d < 2:
        return False
    return g == equality_genus(d, c) and 0 <= g <= castelnuovo_max_genus(d, c)


def _tags(assumptions) -> tuple[str, ...]:
    tags = tuple(assumptions or ())
    unknown = [t for t in tags if t not in ASSUMPTION_TAGS]
    if unknown:
        raise ValueError(f"unknown assumption tags {unknown}; known: {ASSUMPTION_TAGS}")
    return tags


def main_bound_check(s: SchemeDescriptor, assumptions=()) -> BoundReport:
    c = s.c
    lhs, rhs = binom(s.d, 2), central_value(c)
    rep = BoundReport(d=s.d, c=c, lhs=lhs, rhs=rhs, main_bound_ok=lhs <= rhs,
                      equality=lhs == rhs, assumptions=_tags(assumptions))
    msg = rep.messages
    msg.append(f"C({s.d},2) = {lhs} {'<=' if lhs <= rhs else '>'} C({2 * c - 1},{c - 1}) = {rhs}")
    if not rep.main_bound_ok:
        msg.append(f"bound violated: {lhs} > {rhs}; dim(W) <= 2n+1 fails "
                   "(hence K2, N2, N2,2 fail as well)")

    if s.alpha is None:
        msg.append("alpha not given: alpha >= 2c-2 and the equality criterion not evaluated")
    else:
        rep.alpha_lower_ok = s.alpha >= 2 * c - 2
        rep.equality_iff_alpha = rep.equality == (s.alpha == 2 * c - 2)
        rep.regime = regime_compare(s.d, c, s.alpha).regime if s.alpha >= c - 1 else None
        if not rep.alpha_lower_ok:
            msg.append(f"alpha = {s.alpha} < 2c-2 = {2 * c - 2}: dim(W) <= 2n+1 fails")
        if not rep.equality_iff_alpha:
            if s.alpha == 2 * c - 2:
                msg.append(f"alpha = 2c-2 = {s.alpha} but C({s.d},2) != C({2 * c - 1},{c - 1}): "
                           "dim(W) <= 2n fails, so property N2 (and N2,2, K2) is excluded")
            else:
                msg.append(f"equality holds but alpha = {s.alpha} != 2c-2 = {2 * c - 2}: "
                           "dim(W) <= 2n fails, so property N2 (and N2,2, K2) is excluded")
    if rep.equality:
        _classify_into(rep, s.d, c, s.g, shift=0)
    return rep


def _classify_into(rep: BoundReport, d: int, c: int, g: Optional[int], shift: int):
    """Record the equality-case label for the (possibly shifted) pair (d, c)."""
    if g is None:
        rep.messages.append("equality holds; sectional genus not given, classification not evaluated")
        return
    if admissible_equality_case(d, c, g):
        rep.classification_hit = (d + shift, c + shift, g)
        rep.messages.append(f"equality case (d, c, g) = {rep.classification_hit}")
    else:
        rep.messages.append(
            f"equality with g = {g} is impossible for a smooth integral curve section")


def np_bound_check(s: SchemeDescriptor, assumptions=()) -> BoundReport:
    """Bound under property N_p (or N_2,p): C(d+2-p, 2) <= C(2c+3-2p, c+1-p)."""
    if s.p is None:
        raise ValueError("np_bound_check needs p")
    p, c = s.p, s.c
    if c + 1 - p < 1:
        raise ValueError(f"need c + 1 - p >= 1, got c={c}, p={p}")
    d_red, c_red = s.d + 2 - p, c + 2 - p   # degree and codimension after inner projection
    lhs = binom(d_red, 2) if d_red >= 0 else 0
    rhs = binom(2 * c + 3 - 2 * p, c + 1 - p)
    rep = BoundReport(d=s.d, c=c, lhs=lhs, rhs=rhs, main_bound_ok=lhs <= rhs,
                      equality=lhs == rhs, assumptions=_tags(assumptions))
    rep.np_bound_ok = rep.main_bound_ok
    msg = rep.messages
    msg.append(f"C({d_red},2) = {lhs} {'<=' if lhs <= rhs else '>'} "
               f"C({2 * c + 3 - 2 * p},{c + 1 - p}) = {rhs}")
    if not rep.np_bound_ok:
        msg.append(f"N_{p} bound violated: property N_{p} and N_2,{p} excluded")
    h0_min = c * p - binom(p, 2)
    if s.h0 is None:
        msg.append("h0 not given: quadric count and equality criterion not evaluated")
    else:
        rep.h0_lower_ok = s.h0 >= h0_min
        rep.equality_iff_alpha = rep.equality == (s.h0 == h0_min)
        if not rep.h0_lower_ok:
            msg.append(f"h0(I_X(2)) = {s.h0} < cp - C(p,2) = {h0_min}: N_{p} excluded")
        if not rep.equality_iff_alpha:
            msg.append(f"equality criterion h0 = {h0_min} inconsistent: N_{p} excluded")
    if rep.equality and d_red >= 2:
        _classify_into(rep, d_red, c_red, s.g, shift=p - 2)
    return rep


def refined_genus_bound_check(d: int, c: int, g: int) -> bool:
    """C(d,2) + C(d-1,2) - g <= C(2c-1,c-1) + C(2c-1,c-2)."""
    if d < 1 or c < 2 or g < 0:
        raise ValueError("need d >= 1, c >= 2, g >= 0")
    return binom(d, 2) + binom(d - 1, 2) - g <= central_value(c) + binom(2 * c - 1, c - 2)


def f_of_e(e: int) -> Fraction:
    """b_1 / b_0 for the (e, e) complete intersection curve in P^3."""
    if e < 2:
        raise ValueError("e must be >= 2")
    e2 = e * e
    return Fraction(binom(e2 - 1, 2) - (e2 * (e - 2) + 1), binom(e2, 2))


def beta_bound(d: int, c: int, beta: int) -> bool:
    """C(d,2) <= C(2c-1,c-1) + 2c - 2 - beta, with beta the span dimension of Phi(Y).

    beta is caller-supplied; nothing here can compute it.
    """
    return binom(d, 2) <= central_value(c) + 2 * c - 2 - beta


def d_max(c: int) -> int:
    """Largest d with C(d, 2) <= C(2c-1, c-1)."""
    if c < 2:
        raise ValueError("c must be >= 2")
    return (1 + math.isqrt(1 + 8 * central_value(c))) // 2


@dataclass
class RegimeReport:
    c: int
    alpha: int
    regime: Regime
    ours_applies: bool
    zak_applies: bool
    minimal_degree: bool
    trivial_bound: int
    egh_bound: int
    our_bound: Optional[int]
    zak_bound: Optional[int]
    d_ok: Optional[dict] = None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["regime"] = self.regime.value
        return out


def regime_compare(d: Optional[int], c: int, alpha: int) -> RegimeReport:
    """Place alpha + 1 among the windows where each known bound applies.

    Our bound needs alpha + 1 >= 2c - 1; below that the label is
    METHOD_SILENT whatever else applies.  The Zak bound d <= 2c applies for
    C(c,2) < alpha + 1 <= C(c+1,2); where both apply the label names the
    sharper one (ties go to ours).
    """
    if c < 2 or alpha < c - 1:
        raise ValueError("need c >= 2 and alpha >= c - 1")
    a1 = alpha + 1
    ours = a1 >= 2 * c - 1
    zak = binom(c, 2) < a1 <= binom(c + 1, 2)
    our_bound = d_max(c) if ours else None
    zak_bound = 2 * c if zak else None
    if not ours:
        regime = Regime.METHOD_SILENT
    elif zak and zak_bound < our_bound:
        regime = Regime.ZAK_WINDOW
    else:
        regime = Regime.OUR_WINDOW
    rep = RegimeReport(c=c, alpha=alpha, regime=regime, ours_applies=ours, zak_applies=zak,
                       minimal_degree=a1 == binom(c + 1, 2),
                       trivial_bound=2 ** c, egh_bound=2 ** (c - 1) + 1,
                       our_bound=our_bound, zak_bound=zak_bound)
    if d is not None:
        rep.d_ok = {
            "trivial": d <= rep.trivial_bound,
            "ours": None if our_bound is None else d <= our_bound,
            "zak": None if zak_bound is None else d <= zak_bound,
            "minimal_degree": (d == c + 1) if rep.minimal_degree else None,
        }
    return rep


def closing_inequality_holds(c: int) -> bool:
    """2 C(2c-1, c-1) <= D (D - 1) with D = (3c^2 + 2c - 1) / (c - 1)."""
    big_d = Fraction(3 * c * c + 2 * c - 1, c - 1)
    return 2 * central_value(c) <= big_d * (big_d - 1)


def classify_equality_cases(c_max: int) -> list[tuple[int, int, int]]:
    """Equality cases (d, c, g) with smooth integral curve section, 2 <= c <= c_max.

    For each c, d is recovered from C(d,2) = C(2c-1,c-1), g is forced to
    C(d-1,2) - C(2c-1,c-2), and Castelnuovo's inequality decides.  As an
    independent check, the closing inequality in c alone must fail for
    every c >= 6 in range and no survivor may lie there.
    """
    if c_max < 2:
        raise ValueError("c_max must be >= 2")
    survivors = []
    for c in range(2, c_max + 1):
        d = triangular_inverse(central_value(c))
        if d is None or d < 2:
            continue
        g = equality_genus(d, c)
        if 0 <= g <= castelnuovo_max_genus(d, c):
            survivors.append((d, c, g))
    for c in range(6, c_max + 1):
        if closing_inequality_holds(c):
            raise AssertionError(f"closing inequality unexpectedly holds at c = {c}")
    if any(c >= 6 for _, c, _ in survivors):
        raise AssertionError(f"survivor beyond c = 5: {survivors}")
    return survivors


def asymptotic_table(c_from: int, c_to: int) -> list[tuple[int, int, float]]:
    """Rows (c, d_max, d_max * (pi c)^(1/4) / 2^c)."""
    if not 2 <= c_from <= c_to:
        raise ValueError("need 2 <= c_from <= c_to")
    rows = []
    for c in range(c_from, c_to + 1):
        dm = d_max(c)
        ratio = math.exp(math.log(dm) + 0.25 * math.log(math.pi * c) - c * math.log(2))
        rows.append((c, dm, ratio))
    return rows

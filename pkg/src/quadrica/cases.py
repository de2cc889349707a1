"""Named worked examples, each re-verified against a fresh computation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import BoundReport, SchemeDescriptor, main_bound_check


def conclusion(rep: BoundReport) -> str:
    if not rep.main_bound_ok:
        return f"bound violated: {rep.lhs} > {rep.rhs}"
    if rep.alpha_lower_ok is False or rep.equality_iff_alpha is False:
        return "property N2 excluded"
    if rep.classification_hit:
        return "equality case (d, c, g) = ({}, {}, {})".format(*rep.classification_hit)
    return "consistent"


@dataclass(frozen=True)
class CaseStudy:
    name: str
    descriptor: SchemeDescriptor
    expected: dict
    citation: str
    assumptions: tuple[str, ...] = field(default=())

    def compute(self) -> BoundReport:
        return main_bound_check(self.descriptor, self.assumptions)

    def mismatches(self) -> dict:
        """{field: (expected, computed)} for every field that disagrees."""
        rep = self.compute()
        got = rep.as_dict()
        got["conclusion"] = conclusion(rep)
        return {key: (want, got[key]) for key, want in self.expected.items()
                if got[key] != want}


CASE_STUDIES = {cs.name: cs for cs in [
    CaseStudy(
        "eight-points-p4",
        SchemeDescriptor(d=8, n=0, r=4, alpha=6),
        {"c": 4, "lhs": 28, "rhs": 35, "main_bound_ok": True, "equality": False,
         "alpha_lower_ok": True, "equality_iff_alpha": False,
         "conclusion": "property N2 excluded"},
        "8 general points in P^4 cut out by 7 quadrics: alpha = 2c-2 but 28 != 35",
    ),
    CaseStudy(
        "remW-nine-points",
        SchemeDescriptor(d=9, n=0, r=4, alpha=6),
        {"c": 4, "lhs": 36, "rhs": 35, "main_bound_ok": False, "equality": False,
         "conclusion": "bound violated: 36 > 35"},
        "base locus of (F0:F1:F2:wx:wy:wz:wu) on P^4: 8 points plus (0:0:0:0:1); "
        "double-cover lines exist, so the bound may fail",
    ),
    CaseStudy(
        "segre-p1p2-section",
        SchemeDescriptor(d=3, n=1, r=3, alpha=2, g=0),
        {"c": 2, "lhs": 3, "rhs": 3, "main_bound_ok": True, "equality": True,
         "equality_iff_alpha": True, "classification_hit": [3, 2, 0],
         "conclusion": "equality case (d, c, g) = (3, 2, 0)"},
        "curve section of P^1 x P^2 in P^5: the twisted cubic",
        ("N2",),
    ),
    CaseStudy(
        "g14-section",
        SchemeDescriptor(d=5, n=1, r=4, alpha=4, g=1),
        {"c": 3, "lhs": 10, "rhs": 10, "main_bound_ok": True, "equality": True,
         "equality_iff_alpha": True, "classification_hit": [5, 3, 1],
         "conclusion": "equality case (d, c, g) = (5, 3, 1)"},
        "curve section of G(1,4) in P^9: elliptic normal quintic",
        ("N2",),
    ),
    CaseStudy(
        "genus3-octic-p5",
        SchemeDescriptor(d=8, n=1, r=5, alpha=6, g=3),
        {"c": 4, "lhs": 28, "rhs": 35, "main_bound_ok": True, "equality": False,
         "alpha_lower_ok": True, "equality_iff_alpha": False,
         "conclusion": "property N2 excluded"},
        "genus 3 curve of degree 8 in P^5, 7 quadrics: same numbers as 8 points in P^4",
    ),
]}


def verify_registry() -> None:
    """Raise if any registered case study disagrees with a fresh computation."""
    for cs in CASE_STUDIES.values():
        bad = cs.mismatches()
        if bad:
            raise AssertionError(f"case study {cs.name!r} out of date: {bad}")


verify_registry()

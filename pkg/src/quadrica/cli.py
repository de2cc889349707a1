"""Command-line front end.

Every subcommand prints a human-readable table by default, a JSON document
with ``--json`` (top-level ``"schema": "quadrica/1"``) or CSV rows with
``--csv``.  The exit status is 0 iff every requested check holds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .bounds import (SchemeDescriptor, asymptotic_table, castelnuovo_max_genus,
                     classify_equality_cases, closing_inequality_holds, f_of_e,
                     main_bound_check, np_bound_check, refined_genus_bound_check,
                     regime_compare, ASSUMPTION_TAGS)
from .cases import CASE_STUDIES, conclusion
from .chow_ring import complete_intersection_numerics, quadric_numerics
from .double_points import (b_vector, coefficient_identity_check,
                            veronese_double_points_direct, veronese_double_points_via_b,
                            veronese_weights)
from .exact_arith import binom, vandermonde_check
from .line_restriction import classify_line, load_forms, sample_lines, LineCase
from .schubert import common_secant_count, pairing, secant_cycle
from . import diophantine

SCHEMA = "quadrica/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3
EXIT_NOT_FOUND = 4
EXIT_DOMAIN = 5


class UsageError(Exception):
    pass


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "malformed" in message:
            raise MalformedInput(message)
        raise UsageError(message)


# -- argument types ---------------------------------------------------------

def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None


def _rational_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed point {text!r}") from None


def _ci_spec(text: str) -> tuple[int, list[int]]:
    """``m:e1,e2,...`` -> (m, [e1, e2, ...])."""
    try:
        m, _, degs = text.partition(":")
        return int(m), [int(e) for e in degs.split(",") if e.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed complete intersection {text!r}") from None


# -- output -----------------------------------------------------------------

def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in header]] + [[_fmt(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, bool) or x is None:
        return {True: "yes", False: "no", None: "-"}[x]
    if isinstance(x, float):
        return f"{x:.6e}"
    return str(x)


class Result:
    """What a subcommand produced: JSON payload, table, and overall verdict."""

    def __init__(self, command: str, payload: dict, ok: bool = True,
                 header: Sequence[str] = (), rows: Sequence[Sequence] = (),
                 text: str = ""):
        self.command = command
        self.payload = payload
        self.ok = ok
        self.header = list(header)
        self.rows = [list(r) for r in rows]
        self.text = text

    def emit(self, fmt: str, out) -> None:
        if fmt == "json":
            doc = {"schema": SCHEMA, "command": self.command, "ok": self.ok}
            doc.update(self.payload)
            out.write(render_json(doc) + "\n")
        elif fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows([["" if x is None else x for x in r] for r in self.rows])
        else:
            if self.text:
                out.write(self.text.rstrip("\n") + "\n")
            if self.header:
                out.write(_table(self.header, self.rows) + "\n")


def _report_rows(rep_dict: dict, keys: Sequence[str]) -> list[list]:
    return [[k, rep_dict.get(k)] for k in keys]


_REPORT_KEYS = ("d", "c", "lhs", "rhs", "main_bound_ok", "equality", "alpha_lower_ok",
                "equality_iff_alpha", "np_bound_ok", "h0_lower_ok", "classification_hit",
                "regime", "conclusion")


def _report_result(command: str, rep) -> Result:
    d = rep.as_dict()
    d["conclusion"] = conclusion(rep)
    return Result(command, {"report": d}, ok=rep.all_hold, header=["field", "value"],
                  rows=_report_rows(d, _REPORT_KEYS), text="\n".join(rep.messages))


# -- subcommands ------------------------------------------------------------

def cmd_bound(a) -> Result:
    s = SchemeDescriptor(d=a.d, n=a.n, r=a.r, alpha=a.alpha, g=a.g)
    return _report_result("bound", main_bound_check(s, a.assume))


def cmd_np_bound(a) -> Result:
    s = SchemeDescriptor.from_codim(a.d, a.c, p=a.p, h0=a.h0, g=a.g)
    return _report_result("np-bound", np_bound_check(s, a.assume))


def cmd_double_points(a) -> Result:
    if a.quadric is not None:
        v, label = quadric_numerics(a.quadric), f"quadric of dimension {a.quadric}"
    else:
        m, degs = a.ci
        v = complete_intersection_numerics(m, degs)
        label = f"complete intersection of type {tuple(degs)} in P^{m}"
    b = b_vector(v).values
    direct, via_b = veronese_double_points_direct(v), veronese_double_points_via_b(v)
    payload = {"variety": label, "dim": v.dim, "degree": v.degree,
               "segre_numbers": list(v.segre_numbers), "sectional_genus": v.sectional_genus,
               "b": list(b), "delta_direct": direct, "delta_via_b": via_b,
               "agree": direct == via_b}
    weights = veronese_weights(v.dim)
    rows = [[i, v.segre_numbers[i], b[i], weights[i]] for i in range(v.dim + 1)]
    text = (f"{label}: dim {v.dim}, degree {v.degree}, sectional genus "
            f"{_fmt(v.sectional_genus)}\n"
            f"Delta[v2(Y)] direct = {direct}, via b = {via_b}, agree = {_fmt(direct == via_b)}")
    return Result("double-points", payload, ok=direct == via_b,
                  header=["i", "H^(k-i)s_i", "b_i", "C(2k+1,k-i)"], rows=rows, text=text)


def cmd_secants(a) -> Result:
    count = common_secant_count(a.a, a.b, a.r)
    sx, sy = secant_cycle(a.a, a.r), secant_cycle(a.b, a.r)
    via_pairing = pairing(sx, sy)
    payload = {"a": a.a, "b": a.b, "r": a.r, "count": count, "via_pairing": via_pairing,
               "secant_cycle_a": str(sx), "secant_cycle_b": str(sy),
               "agree": count == via_pairing}
    text = (f"S_X = {sx}\nS_Y = {sy}\n"
            f"common secant lines: {count} (Schubert pairing: {via_pairing})")
    return Result("secants", payload, ok=count == via_pairing,
                  header=["count", "via_pairing", "agree"],
                  rows=[[count, via_pairing, count == via_pairing]], text=text)


def cmd_classify_line(a) -> Result:
    forms = load_forms(a.forms)
    case = classify_line(forms, a.p, a.q)
    payload = {"case": case.value, "case_label": case.roman}
    return Result("classify-line", payload, header=["case", "case_label"],
                  rows=[[case.value, case.roman]])


def cmd_sample_lines(a) -> Result:
    forms = load_forms(a.forms)
    sample = sample_lines(forms, a.trials, a.seed, a.height)
    payload = sample.as_dict()
    payload.update(seed=a.seed, height=a.height)
    rows = [[case.value, case.roman, sample.counts.get(case, 0)] for case in LineCase]
    text = f"double-cover lines found: {_fmt(sample.double_cover_found)}"
    return Result("sample-lines", payload, header=["case", "case_label", "count"],
                  rows=rows, text=text)


def cmd_diophantine(a) -> Result:
    if a.log:
        if a.shards != 1 or a.method != "incremental":
            raise UsageError("--log needs a single shard and the incremental method")
        with open(a.log, "w", newline="") as fh:
            sols = diophantine.search_with_log(a.c_min, a.c_max, fh)
    else:
        sols = diophantine.search(a.c_min, a.c_max, a.shards, a.method)
    payload = {"c_min": a.c_min, "c_max": a.c_max, "shards": a.shards, "method": a.method,
               "solutions": [s.as_dict() for s in sols],
               "coverage": f"all solutions with {a.c_min} <= c <= {a.c_max}; "
                           "nothing is claimed beyond this range"}
    rows = [[s.d, s.c, s.value] for s in sols]
    return Result("diophantine", payload, header=["d", "c", "value"], rows=rows,
                  text=payload["coverage"])


def cmd_classify_equality(a) -> Result:
    survivors = classify_equality_cases(a.c_max)
    closing_fails = all(not closing_inequality_holds(c) for c in range(6, a.c_max + 1))
    rejected = []
    for s in diophantine.search(2, a.c_max):
        if not any(s.c == c for _, c, _ in survivors):
            g = binom(s.d - 1, 2) - binom(2 * s.c - 1, s.c - 2)
            rejected.append({"d": s.d, "c": s.c, "forced_genus": g,
                             "castelnuovo_max": str(castelnuovo_max_genus(s.d, s.c))})
    payload = {"c_max": a.c_max, "survivors": [list(t) for t in survivors],
               "rejected_solutions": rejected, "closing_inequality_fails_c_ge_6": closing_fails}
    text = "\n".join(f"rejected (d, c) = ({r['d']}, {r['c']}): forced g = {r['forced_genus']}"
                     f" > {r['castelnuovo_max']}" for r in rejected)
    return Result("classify-equality", payload, ok=closing_fails,
                  header=["d", "c", "g"], rows=survivors, text=text)


def cmd_asymptotics(a) -> Result:
    table = asymptotic_table(a.c_from, a.c_to)
    payload = {"rows": [{"c": c, "d_max": d, "ratio": r} for c, d, r in table]}
    return Result("asymptotics", payload, header=["c", "d_max", "ratio"], rows=table)


def identity_suite(k_max: int) -> dict:
    """Run the binomial identities behind the Veronese double-point formula."""
    vander = all(vandermonde_check(m, x, y) for m in range(k_max + 1)
                 for x in range(k_max + 1) for y in range(k_max + 1))
    coeff = all(coefficient_identity_check(k, i, q) for k in range(1, k_max + 1)
                for i in range(k + 1) for q in range(1, k + 1))
    weights = all(sum(veronese_weights(k)) == 4 ** k for k in range(k_max + 1))
    quadrics = all(veronese_double_points_direct(quadric_numerics(k))
                   == veronese_double_points_via_b(quadric_numerics(k))
                   == binom(2 * k + 1, k) for k in range(k_max + 1))
    return {"vandermonde": vander, "coefficient_identity": coeff,
            "weights_sum_to_4^k": weights, "quadric_delta": quadrics}


def cmd_verify_identities(a) -> Result:
    verdicts = identity_suite(a.k_max)
    ok = all(verdicts.values())
    return Result("verify-identities", {"k_max": a.k_max, "verdicts": verdicts}, ok=ok,
                  header=["identity", "holds"], rows=list(verdicts.items()))


def cmd_case_study(a) -> Result:
    if a.all:
        names = list(CASE_STUDIES)
    elif a.name:
        if a.name not in CASE_STUDIES:
            raise UsageError(f"unknown case study {a.name!r}; known: {', '.join(CASE_STUDIES)}")
        names = [a.name]
    else:
        raise UsageError("give a case-study name or --all")
    results, rows, lines = [], [], []
    for name in names:
        cs = CASE_STUDIES[name]
        rep = cs.compute()
        bad = cs.mismatches()
        results.append({"name": name, "citation": cs.citation, "report": rep.as_dict(),
                        "conclusion": conclusion(rep), "matches_expected": not bad,
                        "mismatches": {k: list(v) for k, v in bad.items()}})
        rows.append([name, f"{rep.lhs} {'<=' if rep.main_bound_ok else '>'} {rep.rhs}",
                     rep.equality, conclusion(rep), not bad])
        lines.append(f"{name}: {cs.citation}")
    ok = all(r["matches_expected"] for r in results)
    return Result("case-study", {"cases": results}, ok=ok,
                  header=["case", "C(d,2) vs C(2c-1,c-1)", "equality", "conclusion", "verified"],
                  rows=rows, text="\n".join(lines))


def cmd_regime(a) -> Result:
    rep = regime_compare(a.d, a.c, a.alpha)
    d = rep.as_dict()
    rows = [[k, d[k]] for k in ("regime", "ours_applies", "zak_applies", "minimal_degree",
                                "trivial_bound", "egh_bound", "our_bound", "zak_bound")]
    ok = rep.d_ok is None or all(v is not False for v in rep.d_ok.values())
    return Result("regime", {"regime": d}, ok=ok, header=["field", "value"], rows=rows)


def cmd_refined_bound(a) -> Result:
    holds = refined_genus_bound_check(a.d, a.c, a.g)
    return Result("refined-bound", {"d": a.d, "c": a.c, "g": a.g, "holds": holds}, ok=holds,
                  header=["d", "c", "g", "holds"], rows=[[a.d, a.c, a.g, holds]])


def cmd_f_of_e(a) -> Result:
    rows = [[e, str(f_of_e(e))] for e in range(2, a.e_max + 1)]
    return Result("f-of-e", {"values": {str(e): v for e, v in rows}},
                  header=["e", "f(e)"], rows=rows)


def _catalog_rows(path: str) -> list[dict]:
    with open(path, newline="") as fh:
        if path.endswith(".json"):
            rows = json.load(fh)
        else:
            rows = list(csv.DictReader(fh))

    def parse(value):
        if value is None or (isinstance(value, str) and not value.strip()):
            return None
        return int(value)

    fields = ("d", "n", "r", "alpha", "g", "h0", "p")
    try:
        return [{k: parse(row.get(k)) for k in fields} for row in rows]
    except (ValueError, TypeError, AttributeError) as exc:
        raise MalformedInput(f"malformed catalog row in {path}: {exc}") from None


def cmd_audit(a) -> Result:
    reports, rows = [], []
    for row in _catalog_rows(a.catalog):
        s = SchemeDescriptor(**row)
        rep = np_bound_check(s) if s.p is not None else main_bound_check(s)
        d = rep.as_dict()
        d["conclusion"] = conclusion(rep)
        d["descriptor"] = row
        reports.append(d)
        rows.append([row["d"], row["n"], row["r"], row["alpha"], row["p"],
                     rep.main_bound_ok, rep.equality, d["conclusion"]])
    ok = all(r["all_hold"] for r in reports)
    return Result("audit", {"reports": reports}, ok=ok,
                  header=["d", "n", "r", "alpha", "p", "bound_ok", "equality", "conclusion"],
                  rows=rows)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json",
                     default=argparse.SUPPRESS, help="emit a JSON document")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv",
                     default=argparse.SUPPRESS, help="emit CSV rows")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="no output, exit status only")

    parser = _Parser(prog="quadrica", parents=[common],
                     description="Double points, secant counts and degree bounds "
                                 "for schemes defined by quadrics.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(func=func)
        return p

    def assume(p):
        p.add_argument("--assume", nargs="*", default=[], choices=ASSUMPTION_TAGS,
                       metavar="TAG", help="hypotheses vouched for by the caller")

    p = add("bound", cmd_bound, "main degree bound for d, n, r")
    p.add_argument("d", type=_int)
    p.add_argument("n", type=_int)
    p.add_argument("r", type=_int)
    p.add_argument("--alpha", type=_int)
    p.add_argument("--g", type=_int)
    assume(p)

    p = add("np-bound", cmd_np_bound, "bound under property N_p")
    p.add_argument("d", type=_int)
    p.add_argument("c", type=_int)
    p.add_argument("p", type=_int)
    p.add_argument("--h0", type=_int)
    p.add_argument("--g", type=_int)
    assume(p)

    p = add("double-points", cmd_double_points, "b-vector and Veronese double points")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--ci", type=_ci_spec, metavar="m:e1,e2,...")
    which.add_argument("--quadric", type=_int, metavar="k")

    p = add("secants", cmd_secants, "common secant lines of two varieties")
    p.add_argument("--a", type=_int_list, required=True, metavar="a0,a1,...")
    p.add_argument("--b", type=_int_list, required=True, metavar="b0,b1,...")
    p.add_argument("--r", type=_int, required=True)

    p = add("classify-line", cmd_classify_line, "restriction of a quadric system to a line")
    p.add_argument("--forms", required=True)
    p.add_argument("--p", type=_rational_point, required=True, metavar="x0,..,xr")
    p.add_argument("--q", type=_rational_point, required=True, metavar="x0,..,xr")

    p = add("sample-lines", cmd_sample_lines, "histogram of line cases over random lines")
    p.add_argument("--forms", required=True)
    p.add_argument("--trials", type=_int, required=True)
    p.add_argument("--seed", type=_int, default=0)
    p.add_argument("--height", type=_int, default=3)

    p = add("diophantine", cmd_diophantine, "solutions of C(d,2) = C(2c-1,c-1)")
    p.add_argument("--c-max", type=_int, required=True)
    p.add_argument("--c-min", type=_int, default=2)
    p.add_argument("--shards", type=_int, default=1)
    p.add_argument("--method", choices=diophantine.METHODS, default="incremental")
    p.add_argument("--log", metavar="FILE", help="CSV scan log (c, value, is_triangular)")

    p = add("classify-equality", cmd_classify_equality, "equality cases (d, c, g)")
    p.add_argument("--c-max", type=_int, required=True)

    p = add("asymptotics", cmd_asymptotics, "d_max(c) against 2^c / (pi c)^(1/4)")
    p.add_argument("--c-from", type=_int, required=True)
    p.add_argument("--c-to", type=_int, required=True)

    p = add("verify-identities", cmd_verify_identities, "binomial identity suite")
    p.add_argument("--k-max", type=_int, default=30)

    p = add("case-study", cmd_case_study, "recompute a registered example")
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")

    p = add("regime", cmd_regime, "which bound applies for given c and alpha")
    p.add_argument("--c", type=_int, required=True)
    p.add_argument("--alpha", type=_int, required=True)
    p.add_argument("--d", type=_int)

    p = add("refined-bound", cmd_refined_bound, "genus-refined bound")
    p.add_argument("d", type=_int)
    p.add_argument("c", type=_int)
    p.add_argument("g", type=_int)

    p = add("f-of-e", cmd_f_of_e, "the ratio b_1/b_0 of (e,e) complete intersections")
    p.add_argument("--e-max", type=_int, default=10)

    p = add("audit", cmd_audit, "check every descriptor in a CSV or JSON catalog")
    p.add_argument("catalog")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        err.write(f"quadrica: usage error: {exc}\n")
        return EXIT_USAGE
    except (MalformedInput, json.JSONDecodeError) as exc:
        err.write(f"quadrica: malformed input: {exc}\n")
        return EXIT_MALFORMED
    except FileNotFoundError as exc:
        err.write(f"quadrica: file not found: {exc.filename}\n")
        return EXIT_NOT_FOUND
    except ValueError as exc:
        err.write(f"quadrica: {exc}\n")
        return EXIT_DOMAIN
    if not getattr(args, "quiet", False):
        buf = io.StringIO()
        result.emit(getattr(args, "fmt", "text"), buf)
        out.write(buf.getvalue())
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "identity_suite", "render_json"]

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadrica.bounds import (Regime, SchemeDescriptor, asymptotic_table, beta_bound,
                             castelnuovo_max_genus, classify_equality_cases,
                             closing_inequality_holds, d_max, equality_genus, f_of_e,
                             main_bound_check, np_bound_check, refined_genus_bound_check,
                             regime_compare)
from quadrica.exact_arith import binom


def d_max_scan(c):
    # oracle: bisection on d with C(d, 2) <= C(2c-1, c-1), no square roots
    rhs = math.comb(2 * c - 1, c - 1)
    lo, hi = 1, 2
    while hi * (hi - 1) // 2 <= rhs:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * (mid - 1) // 2 <= rhs:
            lo = mid
        else:
            hi = mid
    return lo


def test_descriptor_validation():
    with pytest.raises(ValueError):
        SchemeDescriptor(d=3, n=1, r=2)
    with pytest.raises(ValueError):
        SchemeDescriptor(d=0, n=0, r=4)
    with pytest.raises(ValueError):
        SchemeDescriptor(d=3, n=0, r=4, p=1)
    assert SchemeDescriptor.from_codim(5, 3).r == 4


def test_eight_points():
    rep = main_bound_check(SchemeDescriptor(d=8, n=0, r=4, alpha=6))
    assert (rep.c, rep.lhs, rep.rhs) == (4, 28, 35)
    assert rep.main_bound_ok and not rep.equality
    assert rep.alpha_lower_ok and rep.equality_iff_alpha is False
    assert not rep.all_hold


def test_nine_points_violates():
    rep = main_bound_check(SchemeDescriptor(d=9, n=0, r=4, alpha=6))
    assert (rep.lhs, rep.rhs, rep.main_bound_ok) == (36, 35, False)


def test_twisted_cubic():
    rep = main_bound_check(SchemeDescriptor(d=3, n=1, r=3, alpha=2, g=0))
    assert rep.c == 2 and rep.equality and rep.equality_iff_alpha
    assert rep.classification_hit == (3, 2, 0)
    assert rep.all_hold


def test_missing_alpha_not_evaluated():
    rep = main_bound_check(SchemeDescriptor(d=5, n=1, r=4))
    assert rep.alpha_lower_ok is None and rep.equality_iff_alpha is None
    assert rep.regime is None
    assert any("not evaluated" in m for m in rep.messages)


def test_unknown_assumption_tag():
    with pytest.raises(ValueError):
        main_bound_check(SchemeDescriptor(d=3, n=1, r=3), ["N7"])
    rep = main_bound_check(SchemeDescriptor(d=3, n=1, r=3), ["N2"])
    assert rep.assumptions == ("N2",)


def test_castelnuovo_examples():
    assert castelnuovo_max_genus(5, 3) == Fraction(14, 3)
    assert castelnuovo_max_genus(3, 2) == 2
    for c in range(2, 20):
        assert castelnuovo_max_genus(2, c) == Fraction(1, 2 * c) + Fraction(1, 2)


def test_221_9_rejected():
    assert binom(221, 2) == binom(17, 8) == 24310
    g = equality_genus(221, 9)
    assert g == 24090 - 19448 == 4642
    assert castelnuovo_max_genus(221, 9) == Fraction(48400, 18) + 110
    assert g > castelnuovo_max_genus(221, 9)


def test_classification():
    assert classify_equality_cases(2) == [(3, 2, 0)]
    assert classify_equality_cases(100) == [(3, 2, 0), (5, 3, 1)]


def test_classification_stable_to_1000():
    assert classify_equality_cases(1000) == [(3, 2, 0), (5, 3, 1)]


def test_closing_inequality():
    for c in range(6, 101):
        assert not closing_inequality_holds(c)
    assert closing_inequality_holds(5)


def test_np_examples():
    for p in range(2, 21):
        rep = np_bound_check(SchemeDescriptor.from_codim(p + 1, p, p=p, g=0))
        assert rep.equality and rep.classification_hit == (p + 1, p, 0)
        rep = np_bound_check(SchemeDescriptor.from_codim(p + 3, p + 1, p=p, g=1))
        assert rep.equality and rep.classification_hit == (p + 3, p + 1, 1)
    with pytest.raises(ValueError):
        np_bound_check(SchemeDescriptor.from_codim(5, 3, p=5))
    with pytest.raises(ValueError):
        np_bound_check(SchemeDescriptor.from_codim(5, 3))


def test_np_h0_criterion():
    rep = np_bound_check(SchemeDescriptor.from_codim(6, 4, p=3, h0=4 * 3 - 3))
    assert rep.equality and rep.h0_lower_ok and rep.equality_iff_alpha
    rep = np_bound_check(SchemeDescriptor.from_codim(6, 4, p=3, h0=8))
    assert rep.h0_lower_ok is False


def test_np_p2_matches_main_1000_random():
    rng = random.Random(17)
    for _ in range(1000):
        c = rng.randint(2, 30)
        d = rng.randint(1, d_max_scan(c) + 5)
        g = rng.choice([None, 0, 1, rng.randint(0, 50)])
        alpha = rng.randint(c - 1, 3 * c)
        main = main_bound_check(SchemeDescriptor.from_codim(d, c, alpha=alpha, g=g))
        np2 = np_bound_check(SchemeDescriptor.from_codim(d, c, p=2, h0=alpha + 1, g=g))
        assert (main.lhs, main.rhs, main.main_bound_ok, main.equality) == \
               (np2.lhs, np2.rhs, np2.np_bound_ok, np2.equality)
        assert main.equality_iff_alpha == np2.equality_iff_alpha
        assert main.classification_hit == np2.classification_hit


@given(st.integers(1, 300), st.integers(2, 40))
def test_refined_at_zero_genus_relation(d, c):
    slack = binom(2 * c - 1, c - 2) + binom(d - 1, 2)
    # at g = 0 the refined check is the main inequality shifted by C(2c-1,c-2) - C(d-1,2)
    excess = binom(d, 2) - binom(2 * c - 1, c - 1)
    assert refined_genus_bound_check(d, c, 0) == (excess <= binom(2 * c - 1, c - 2) - binom(d - 1, 2))
    if refined_genus_bound_check(d, c, 0):
        assert binom(d, 2) <= binom(2 * c - 1, c - 1) + slack


def test_refined_examples():
    assert refined_genus_bound_check(3, 2, 0)
    assert refined_genus_bound_check(5, 3, 1)


@given(st.integers(1, 100), st.integers(2, 12), st.integers(0, 500), st.integers(0, 500))
def test_refined_monotone_in_g(d, c, g, extra):
    if refined_genus_bound_check(d, c, g):
        assert refined_genus_bound_check(d, c, g + extra)


def test_f_of_e():
    assert f_of_e(2) == Fraction(1, 3)
    assert f_of_e(3) == Fraction(1, 2)
    prev = None
    for e in range(2, 51):
        gap = 1 - f_of_e(e)
        assert 0 < gap
        if prev is not None:
            assert gap < prev
        prev = gap
    with pytest.raises(ValueError):
        f_of_e(1)


def test_beta_bound():
    assert beta_bound(8, 4, 0)
    assert not beta_bound(8, 4, 14)


def test_d_max():
    assert d_max(2) == 3 and d_max(9) == 221 and d_max(4) == 8
    prev = 0
    for c in range(2, 1001):
        dm = d_max(c)
        assert dm > prev
        prev = dm
        if c <= 400:
            assert dm == d_max_scan(c)


def test_regime_examples():
    rep = regime_compare(None, 4, 6)
    assert rep.regime is Regime.OUR_WINDOW
    assert (rep.trivial_bound, rep.egh_bound, rep.our_bound) == (16, 9, 8)
    assert regime_compare(None, 3, 3).regime is Regime.METHOD_SILENT
    for c in range(2, 12):
        rep = regime_compare(c + 1, c, binom(c + 1, 2) - 1)
        assert rep.minimal_degree and rep.d_ok["minimal_degree"]


def test_regime_windows():
    for c in range(2, 15):
        for alpha in range(c - 1, binom(c + 1, 2)):
            rep = regime_compare(None, c, alpha)
            if alpha + 1 < 2 * c - 1:
                assert rep.regime is Regime.METHOD_SILENT
            elif alpha + 1 <= binom(c, 2):
                assert rep.regime is Regime.OUR_WINDOW
            else:
                assert rep.zak_applies
                sharper = Regime.ZAK_WINDOW if 2 * c < d_max(c) else Regime.OUR_WINDOW
                assert rep.regime is sharper
    with pytest.raises(ValueError):
        regime_compare(None, 4, 2)


def test_asymptotic_table():
    rows = dict((c, (dm, ratio)) for c, dm, ratio in asymptotic_table(2, 200))
    assert rows[2][0] == 3 and rows[9][0] == 221
    assert 0.9 <= rows[100][1] <= 1.1
    assert 0.95 <= rows[200][1] <= 1.05
    with pytest.raises(ValueError):
        asymptotic_table(5, 4)

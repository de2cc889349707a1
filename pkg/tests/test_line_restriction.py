import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadrica.line_restriction import (LineCase, QuadraticForm, classify, classify_line,
                                       complete_system, double_cover_example, forms_from_json,
                                       forms_to_json, load_forms, restrict_to_line, row_reduce,
                                       sample_lines)

F = Fraction
X2, XY, Y2 = (F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))


# oracle: gcd of binary forms by Euclid on the dehomogenised polynomials

def _trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _polymod(a, b):
    a = list(a)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[shift + i] -= c * x
        a = _trim(a[:-1])
    return a


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _polymod(a, b)
    return a


def gcd_degree(forms):
    forms = [f for f in forms if any(f)]
    if not forms:
        return None
    # lam x^2 + mu x y + nu y^2 -> nu + mu t + lam t^2 with t = x / y
    y_mult = min(0 if f[0] else (1 if f[1] else 2) for f in forms)
    g = []
    for f in forms:
        g = _gcd(g, [f[2], f[1], f[0]]) if g else _trim([f[2], f[1], f[0]])
    return y_mult + len(g) - 1


def oracle_case(forms):
    sigma = len(row_reduce(forms))
    if sigma == 0:
        return LineCase.CONTAINED_IN_X
    if sigma == 3:
        return LineCase.VERONESE_EMBEDDING
    deg = gcd_degree(forms)
    if sigma == 1:
        f = next(f for f in forms if any(f))
        disc = f[1] ** 2 - 4 * f[0] * f[2]
        return LineCase.CONTRACTED_SECANT if disc else LineCase.CONTRACTED_TANGENT
    return LineCase.MEETS_AT_ONE_POINT if deg == 1 else LineCase.DOUBLE_COVER


def test_restrict_examples():
    f = QuadraticForm.from_monomials(2, {(0, 1): 1})
    assert restrict_to_line([f], (1, 0, 0), (0, 1, 0)) == [(0, 1, 0)]
    g = QuadraticForm.from_monomials(2, {(0, 0): 1})
    assert restrict_to_line([g], (1, 0, 0), (0, 1, 0)) == [(1, 0, 0)]
    z = QuadraticForm.from_monomials(2, {})
    assert restrict_to_line([z], (1, 2, 3), (0, 1, 0)) == [(0, 0, 0)]


def test_restrict_errors():
    f = QuadraticForm.from_monomials(2, {(0, 1): 1})
    with pytest.raises(ValueError):
        restrict_to_line([f], (1, 2, 3), (2, 4, 6))
    with pytest.raises(ValueError):
        restrict_to_line([f], (0, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        restrict_to_line([f], (1, 0), (0, 1))


def test_restriction_matches_substitution():
    rng = random.Random(3)
    for _ in range(200):
        r = rng.randint(1, 4)
        f = QuadraticForm.from_monomials(r, {(i, j): rng.randint(-3, 3)
                                              for i in range(r + 1) for j in range(i, r + 1)})
        p = [rng.randint(-3, 3) for _ in range(r + 1)]
        q = [rng.randint(-3, 3) for _ in range(r + 1)]
        if not any(p) or not any(q) or all(p[i] * q[j] == p[j] * q[i]
                                           for i in range(r + 1) for j in range(r + 1)):
            continue
        lam, mu, nu = restrict_to_line([f], p, q)[0]
        for x, y in [(1, 0), (0, 1), (1, 1), (2, -3)]:
            pt = [x * a + y * b for a, b in zip(p, q)]
            assert f(pt) == lam * x * x + mu * x * y + nu * y * y


def test_classify_examples():
    assert classify([XY]) is LineCase.CONTRACTED_SECANT
    assert classify([XY, Y2]) is LineCase.MEETS_AT_ONE_POINT
    assert classify([X2, Y2]) is LineCase.DOUBLE_COVER
    assert classify([X2, XY, Y2]) is LineCase.VERONESE_EMBEDDING
    assert classify([]) is LineCase.CONTAINED_IN_X
    assert classify([(0, 0, 0)]) is LineCase.CONTAINED_IN_X
    assert classify([(1, 2, 1)]) is LineCase.CONTRACTED_TANGENT
    # x^2 + y^2 has two distinct roots over C
    assert classify([(1, 0, 1)]) is LineCase.CONTRACTED_SECANT


def test_roman_labels():
    assert [c.roman for c in LineCase] == ["i", "ii", "ii'", "iii", "iv", "v"]


binary = st.tuples(*[st.integers(-4, 4).map(F)] * 3)


@given(st.lists(binary, min_size=0, max_size=4))
def test_classify_matches_gcd_oracle(forms):
    assert classify(forms) is oracle_case(forms)


def random_invertible(rng, n):
    while True:
        m = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if len(row_reduce(m)) == n:
            return m


def random_system(rng, r):
    kind = rng.randrange(4)
    forms = []
    for _ in range(rng.randint(1, 4)):
        coeffs = {(i, j): rng.randint(-2, 2) for i in range(r + 1) for j in range(i, r + 1)
                  if kind == 0 or rng.random() < 0.3}
        forms.append(QuadraticForm.from_monomials(r, coeffs))
    return forms


def random_line(rng, r):
    while True:
        p = [rng.randint(-2, 2) for _ in range(r + 1)]
        q = [rng.randint(-2, 2) for _ in range(r + 1)]
        if any(p) and any(q) and not all(p[i] * q[j] == p[j] * q[i]
                                         for i in range(r + 1) for j in range(r + 1)):
            return p, q


def test_reparametrisation_invariance_1000():
    rng = random.Random(11)
    for _ in range(1000):
        r = rng.randint(1, 4)
        forms = random_system(rng, r)
        p, q = random_line(rng, r)
        a, b, c, d = 0, 0, 0, 0
        while a * d - b * c == 0:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        p2 = [a * x + b * y for x, y in zip(p, q)]
        q2 = [c * x + d * y for x, y in zip(p, q)]
        base = classify_line(forms, p, q)
        assert classify_line(forms, q, p) is base
        assert classify_line(forms, p2, q2) is base


def test_recombination_invariance():
    rng = random.Random(5)
    for _ in range(300):
        r = rng.randint(1, 3)
        forms = random_system(rng, r)
        m = random_invertible(rng, len(forms))
        mixed = [QuadraticForm(tuple(tuple(sum(m[i][k] * forms[k].matrix[a][b]
                                               for k in range(len(forms)))
                                           for b in range(r + 1)) for a in range(r + 1)))
                 for i in range(len(forms))]
        p, q = random_line(rng, r)
        assert classify_line(forms, p, q) is classify_line(mixed, p, q)


def test_complete_system_is_veronese():
    sample = sample_lines(complete_system(3), 1000, seed=1)
    assert sample.counts[LineCase.VERONESE_EMBEDDING] == 1000


def test_double_cover_example_finds_w():
    sample = sample_lines(double_cover_example(), 2000, seed=7, height=1)
    assert sample.double_cover_found
    assert sum(sample.counts.values()) == 2000


def test_sampling_is_deterministic():
    forms = double_cover_example()
    a = sample_lines(forms, 300, seed=42, height=2).as_dict()
    b = sample_lines(forms, 300, seed=42, height=2).as_dict()
    assert a == b


def test_sample_errors():
    with pytest.raises(ValueError):
        sample_lines(complete_system(2), 0, seed=1)
    with pytest.raises(ValueError):
        sample_lines([], 5, seed=1)


def test_known_double_cover_line():
    # on z = u = w = 0 the system restricts to the pencil <x^2, y^2>
    forms = double_cover_example()
    case = classify_line(forms, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
    assert case is LineCase.DOUBLE_COVER


def test_float_rejected():
    with pytest.raises(TypeError):
        QuadraticForm.from_monomials(1, {(0, 0): 0.5})


def test_symmetry_enforced():
    with pytest.raises(ValueError):
        QuadraticForm(((1, 2), (3, 4)))


def test_json_round_trip(tmp_path):
    forms = double_cover_example() + [QuadraticForm.from_monomials(4, {(0, 1): F(1, 3)})]
    doc = forms_to_json(forms)
    assert forms_from_json(json.loads(json.dumps(doc))) == forms
    path = tmp_path / "forms.json"
    path.write_text(json.dumps(doc))
    assert load_forms(path) == forms
    with pytest.raises(ValueError):
        forms_from_json({"forms": []})
    with pytest.raises(ValueError):
        forms_from_json({"r": 1, "forms": [[[1, 0, "1"]]]})

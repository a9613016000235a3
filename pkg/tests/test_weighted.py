from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from sumsynth.oracle import sum_oracle
from sumsynth.poly import BiPoly, UniPoly
from sumsynth.polysum import synth_poly_sum
from sumsynth.weighted import (
    Constant,
    Periodic,
    PolynomialWeight,
    synth_weighted_constant,
    synth_weighted_periodic,
    synth_weighted_polynomial,
    weighted_sum_oracle,
)

from conftest import bipolys, int_unipolys

F = Fraction
ONE, X = UniPoly([1]), UniPoly([0, 1])


def test_oracle_examples():
    assert weighted_sum_oracle(ONE, Periodic((1, -1)), 5) == 1
    assert weighted_sum_oracle(X, Periodic((-1, 1)), 4) == -1 + 2 - 3 + 4 == 2
    assert weighted_sum_oracle(X, Constant(1), 100) == 5050


def test_weight_families():
    assert [Periodic((1, 2, 3))(i) for i in range(1, 8)] == [1, 2, 3, 1, 2, 3, 1]
    assert PolynomialWeight(UniPoly([1, 2]))(3) == 7
    assert Constant(-4)(99) == -4
    with pytest.raises(ValueError):
        Periodic(())
    with pytest.raises(ValueError):
        PolynomialWeight(UniPoly([F(1, 2)]))


@settings(max_examples=30)
@given(bipolys(max_x=3, max_y=2, max_terms=4), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_oracle_recurrence(p, pattern):
    alpha = Periodic(tuple(pattern))
    prev = weighted_sum_oracle(p, alpha, 1)
    for n in range(2, 61):
        cur = weighted_sum_oracle(p, alpha, n)
        assert cur - prev == alpha(n) * p.eval_fact(n)
        prev = cur


@given(bipolys(max_x=3, max_y=1, max_terms=4))
def test_constant_one_is_plain_sum(p):
    for n in (1, 2, 7, 15):
        assert weighted_sum_oracle(p, Constant(1), n) == sum_oracle(p, n)


def test_polynomial_examples():
    assert synth_weighted_polynomial(ONE, X) == UniPoly([0, F(1, 2), F(1, 2)])
    assert synth_weighted_polynomial(X, X) == UniPoly([0, F(1, 6), F(1, 2), F(1, 3)])
    assert synth_weighted_polynomial(UniPoly([0, 0, 1]), ONE) == synth_poly_sum(UniPoly([0, 0, 1]))
    with pytest.raises(ValueError):
        synth_weighted_polynomial(X, UniPoly([F(1, 3)]))


@given(int_unipolys(max_deg=4, lo=-9, hi=9), int_unipolys(max_deg=4, lo=-9, hi=9))
def test_polynomial_weights_match_oracle(w, f):
    g = synth_weighted_polynomial(f, w)
    alpha = PolynomialWeight(w)
    total = 0
    for n in range(1, 101):
        total += alpha(n) * f(n)
        assert g(n) == total


@given(int_unipolys(max_deg=4, lo=-9, hi=9), st.integers(-5, 5))
def test_constant_weights(f, c):
    g = synth_weighted_constant(f, c)
    for n in (1, 5, 30):
        assert g(n) == weighted_sum_oracle(f, Constant(c), n)


def test_periodic_examples():
    r = synth_weighted_periodic(ONE, [1, -1])
    assert r.forms == (ONE, UniPoly())
    r = synth_weighted_periodic(X, [-1, 1])
    assert r.forms[1] == UniPoly([0, F(1, 2)])
    assert r.forms[0] == UniPoly([F(-1, 2), F(-1, 2)])
    for n in range(1, 21):
        assert r(n) == sum((-1) ** i * i for i in range(1, n + 1))
    r = synth_weighted_periodic(X, [1])
    assert r.forms == (UniPoly([0, F(1, 2), F(1, 2)]),)


def test_residue_convention():
    r = synth_weighted_periodic(ONE, [1, 2, 3])
    assert [r.residue(n) for n in range(1, 8)] == [1, 2, 3, 1, 2, 3, 1]


@given(int_unipolys(max_deg=4, lo=-9, hi=9), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_periodic_matches_oracle(f, pattern):
    r = synth_weighted_periodic(f, pattern)
    alpha = Periodic(tuple(pattern))
    total = 0
    for n in range(1, 101):
        total += alpha(n) * f(n)
        assert r.form_for(n)(n) == total
    bound = (f.degree or 0) + 1
    assert all(g.degree is None or g.degree <= bound for g in r.forms)


def test_periodic_rejects_factorials_and_empty_patterns():
    with pytest.raises(ValueError):
        synth_weighted_periodic(BiPoly.y(), [1])
    with pytest.raises(ValueError):
        synth_weighted_periodic(X, [])

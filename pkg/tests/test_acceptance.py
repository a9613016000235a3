"""Exit criteria.  All checks are exact; each has a wall-clock budget."""
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from sumsynth.cli import run_cli
from sumsynth.exactnum import Inconsistent
from sumsynth.factsum import ClosedForm, DegreeBounds, NoSolutionWithinBounds, sampled_system, synth_fact_sum
from sumsynth.faulhaber import faulhaber_row, faulhaber_row_bernoulli, faulhaber_row_system
from sumsynth.oracle import verify_closed_form
from sumsynth.poly import BiPoly, UniPoly
from sumsynth.polysum import BaseCaseMismatch, NonIntegralDelta, delta, membership_sz, synth_poly_sum
from sumsynth.syntax import format_canonical, parse_poly
from sumsynth.weighted import Periodic, PolynomialWeight, synth_weighted_periodic, synth_weighted_polynomial

F = Fraction
SEED = 20261016


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def random_int_poly(rng, max_deg, lo, hi):
    return UniPoly([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg) + 1)])


def random_bipoly(rng):
    terms = {}
    for _ in range(rng.randint(0, 7)):
        key = (rng.randint(0, 6), rng.randint(0, 4))
        terms[key] = F(rng.randint(-99, 99), rng.randint(1, 30))
    return BiPoly(terms)


@pytest.mark.acceptance
def test_ac1_faulhaber_fixtures():
    faulhaber_row.cache_clear()
    with budget(1):
        r1, r2 = run_cli(["faulhaber", "1"]), run_cli(["faulhaber", "2"])
        assert r1.code == r2.code == 0
        assert parse_poly(r1.stdout) == parse_poly("1/2 * n * (n + 1)")
        assert parse_poly(r2.stdout) == parse_poly("1/6 * n * (n + 1) * (2*n + 1)")


@pytest.mark.acceptance
def test_ac2_dual_method_agreement():
    with budget(10):
        for k in range(1, 21):
            by_system = faulhaber_row_system(k)
            by_bernoulli = faulhaber_row_bernoulli(k)
            assert by_system == by_bernoulli
            g = by_system.poly()
            total = 0
            for n in range(1, 201):
                total += n**k
                assert g(n) == total


@pytest.mark.acceptance
def test_ac3_polynomial_sums_property_suite():
    faulhaber_row.cache_clear()
    rng = random.Random(SEED)
    with budget(30):
        for _ in range(200):
            f = random_int_poly(rng, 8, -50, 50)
            g = synth_poly_sum(f)
            assert delta(g) == f
            assert g(1) == f(1)
            assert verify_closed_form(f, g, 100).ok


@pytest.mark.acceptance
def test_ac4_factorial_identity():
    with budget(1):
        r = run_cli(["synth-fact", "n*n!"])
        assert (r.code, r.stdout) == (0, "n*n! + n! - 1\n")
        x, y = BiPoly.x(), BiPoly.y()
        result = synth_fact_sum(x * y)
        assert isinstance(result, ClosedForm)
        assert result.q == x * y + y - 1
        assert verify_closed_form(x * y, result.q, 30).ok


@pytest.mark.acceptance
def test_ac5_no_solution_certificate():
    with budget(5):
        r = run_cli(["synth-fact", "n!", "--deg-x", "3", "--deg-y", "2"])
        assert (r.code, r.stdout) == (1, "no-solution-within-bounds deg_x=3 deg_y=2\n")
        bounds = DegreeBounds(3, 2)
        result = synth_fact_sum(BiPoly.y(), bounds)
        assert isinstance(result, NoSolutionWithinBounds)
        assert result.check()
        sampled = sampled_system(BiPoly.y(), bounds, 28)
        assert sampled.labels[-1] == ("point", 28)
        cert = sampled.solve()
        assert isinstance(cert, Inconsistent) and cert.check(sampled.A, sampled.b)


@pytest.mark.acceptance
def test_ac6_membership_decision():
    with budget(1):
        v = membership_sz(parse_poly("n*(n+1)*1/2"))
        assert v.accepted and v.witness_f == parse_poly("n")
        v = membership_sz(parse_poly("1/2*n^2"))
        assert not v.accepted and isinstance(v.reject_reason, NonIntegralDelta)
        v = membership_sz(parse_poly("n + 1"))
        assert not v.accepted and v.reject_reason == BaseCaseMismatch(F(2), F(1))


@pytest.mark.acceptance
def test_ac7_weighted_suite():
    rng = random.Random(SEED + 7)
    with budget(30):
        for _ in range(100):
            w = random_int_poly(rng, 4, -9, 9)
            f = random_int_poly(rng, 4, -9, 9)
            g = synth_weighted_polynomial(f, w)
            alpha = PolynomialWeight(w)
            total = 0
            for n in range(1, 101):
                total += alpha(n) * f(n)
                assert g(n) == total
        for period in range(1, 6):
            for _ in range(20):
                pattern = [rng.randint(-3, 3) for _ in range(period)]
                f = random_int_poly(rng, 4, -9, 9)
                forms = synth_weighted_periodic(f, pattern)
                alpha = Periodic(tuple(pattern))
                total = 0
                for n in range(1, 101):
                    total += alpha(n) * f(n)
                    assert forms.form_for(n)(n) == total


@pytest.mark.acceptance
def test_ac8_interface_stability():
    rng = random.Random(SEED + 8)
    for _ in range(500):
        q = random_bipoly(rng)
        assert parse_poly(format_canonical(q)) == q
    commands = [
        ["faulhaber", "5"],
        ["synth", "n^3 - 2*n"],
        ["synth-fact", "n^2*n! + n*n!", "--json"],
        ["synth-fact", "n!", "--deg-x", "3", "--deg-y", "2"],
        ["member", "1/2*n^2"],
        ["weighted", "n^2", "--weights", "periodic:1,-2,3"],
        ["verify", "n!", "n!"],
    ]
    for argv in commands:
        runs = [subprocess.run([sys.executable, "-m", "sumsynth", *argv], capture_output=True) for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout and runs[0].stdout
        assert runs[0].returncode == runs[1].returncode

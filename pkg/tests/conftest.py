from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from sumsynth.poly import BiPoly, UniPoly

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
nonzero_rationals = rationals.filter(bool)


@st.composite
def bipolys(draw, max_x=4, max_y=3, max_terms=6, coeffs=rationals):
    keys = draw(
        st.lists(
            st.tuples(st.integers(0, max_x), st.integers(0, max_y)),
            max_size=max_terms,
            unique=True,
        )
    )
    return BiPoly({k: draw(coeffs) for k in keys})


@st.composite
def int_unipolys(draw, max_deg=8, lo=-50, hi=50):
    deg = draw(st.integers(0, max_deg))
    return UniPoly(draw(st.lists(st.integers(lo, hi), min_size=deg + 1, max_size=deg + 1)))


@st.composite
def rat_unipolys(draw, max_deg=5):
    return UniPoly(draw(st.lists(rationals, max_size=max_deg + 1)))


def brute_sum(f, n):
    """Independent big-integer running sum of f(i, i!) for i = 1..n."""
    total = Fraction(0)
    fact = 1
    for i in range(1, n + 1):
        fact *= i
        total += sum(c * i**a * fact**b for (a, b), c in f.items())
    return total


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion with a time budget")


def pytest_runtest_logreport(report):
    if "acceptance" in report.keywords and (report.when == "call" or report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid.rsplit("::", 1)[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

"""Brute-force sums used as ground truth for every closed form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import BiPoly


@dataclass(frozen=True)
class Mismatch:
    n: int
    expected: Fraction
    got: Fraction


@dataclass(frozen=True)
class VerificationReport:
    checked_upto: int
    mismatch: Mismatch | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    @property
    def status(self) -> str:
        return "AllMatch" if self.ok else "FirstMismatch"


def default_n_max(*polys: BiPoly) -> int:
    return 100 if all(p.is_univariate() for p in polys) else 30


def sum_oracle(p: BiPoly, n: int) -> Fraction:
    """``p(1, 1!) + ... + p(n, n!)`` by direct summation."""
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)
    fact = 1
    for i in range(1, n + 1):
        fact *= i
        total += p.eval_at(i, fact)
    return total


def running_sums(p: BiPoly, n_max: int):
    """Yield ``(n, n!, sum_{i<=n} p(i, i!))`` for n = 1..n_max."""
    total = Fraction(0)
    fact = 1
    for n in range(1, n_max + 1):
        fact *= n
        total += p.eval_at(n, fact)
        yield n, fact, total


def verify_closed_form(p: BiPoly, q: BiPoly, n_max: int) -> VerificationReport:
    """Compare ``q(n, n!)`` with the running sum of ``p`` for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    for n, fact, expected in running_sums(p, n_max):
        got = q.eval_at(n, fact)
        if got != expected:
            return VerificationReport(n_max, Mismatch(n, expected, got))
    return VerificationReport(n_max)

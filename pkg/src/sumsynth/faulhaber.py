"""Power-sum polynomials: ``1^k + ... + n^k = c_0 n + c_1 n^2 + ... + c_k n^(k+1)``.

Each row is computed twice, once by solving a truncated Vandermonde-type
system against brute-force sums and once from Bernoulli numbers, and the two
must agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactnum import ConsistencyError, ExactMatrix, UniqueSolution, solve_exact_linear
from .poly import UniPoly


@dataclass(frozen=True)
class FaulhaberRow:
    k: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise ValueError(f"row for k={self.k} needs {self.k + 1} coefficients")

    def poly(self) -> UniPoly:
        return UniPoly({j + 1: c for j, c in enumerate(self.coeffs)})

    def __call__(self, n: int) -> Fraction:
        return self.poly()(n)


def power_sum(k: int, n: int) -> int:
    return sum(i**k for i in range(1, n + 1))


@lru_cache(maxsize=None)
def bernoulli(m: int) -> tuple[Fraction, ...]:
    """B_0..B_m with B_1 = -1/2, from ``sum_{j<=i} C(i+1, j) B_j = 0``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    values = [Fraction(1)]
    for i in range(1, m + 1):
        s = sum(comb(i + 1, j) * values[j] for j in range(i))
        values.append(-s / (i + 1))
    return tuple(values)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")


def faulhaber_row_system(k: int) -> FaulhaberRow:
    _check_k(k)
    size = k + 1
    A = ExactMatrix([[n ** (j + 1) for j in range(size)] for n in range(1, size + 1)])
    b = [power_sum(k, n) for n in range(1, size + 1)]
    sol = solve_exact_linear(A, b)
    if not isinstance(sol, UniqueSolution):
        raise ConsistencyError(f"truncated power-sum system for k={k} is not uniquely solvable")
    row = FaulhaberRow(k, sol.x)
    g = row.poly()
    for n in range(size + 1, size + 11):
        if g(n) != power_sum(k, n):
            raise ConsistencyError(f"row k={k} fails at n={n}")
    return row


def faulhaber_row_bernoulli(k: int) -> FaulhaberRow:
    # With B_1 = -1/2 the standard formula sums 0..n-1; flipping the sign of
    # the odd terms (only B_1 is nonzero among them) gives the sum over 1..n.
    _check_k(k)
    B = bernoulli(k)
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        # term j multiplies n^(k+1-j), i.e. row index k - j
        coeffs[k - j] = (-1) ** j * comb(k + 1, j) * B[j] / (k + 1)
    return FaulhaberRow(k, tuple(coeffs))


@lru_cache(maxsize=None)
def faulhaber_row(k: int) -> FaulhaberRow:
    by_system = faulhaber_row_system(k)
    by_bernoulli = faulhaber_row_bernoulli(k)
    if by_system != by_bernoulli:
        raise ConsistencyError(f"methods disagree for k={k}: {by_system} vs {by_bernoulli}")
    return by_system

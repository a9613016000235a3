"""Exact integers, rationals and linear systems over Q.

Python's ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` keeps itself reduced with a positive denominator, so
both are used directly.  What lives here is the thin contract layer on top of
them plus an exact Gauss-Jordan solver that classifies a system as uniquely
solvable, inconsistent (with a checkable certificate) or underdetermined.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


class InvalidRational(ZeroDivisionError):
    """A rational with zero denominator was requested."""


class DimensionError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent computations disagreed; always a bug."""


def rat_normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise InvalidRational(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise InvalidRational("division by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def int_factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    result = 1
    for i in range(2, n + 1):
        result *= i
    return result


class ExactMatrix:
    """Dense immutable matrix of rationals."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence[RationalLike]], cols: int | None = None):
        grid = tuple(tuple(Fraction(v) for v in row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != cols:
                raise DimensionError("ragged matrix rows")
        self.rows = len(grid)
        self.cols = cols
        self._entries = grid

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i]

    def matvec(self, x: Sequence[RationalLike]) -> list[Fraction]:
        if len(x) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [sum((a * v for a, v in zip(row, x)), Fraction(0)) for row in self._entries]

    def vecmat(self, y: Sequence[RationalLike]) -> list[Fraction]:
        """Row vector times matrix, i.e. ``y^T A``."""
        if len(y) != self.rows:
            raise DimensionError("vector length does not match row count")
        out = [Fraction(0)] * self.cols
        for coef, row in zip(y, self._entries):
            if coef:
                for j, a in enumerate(row):
                    if a:
                        out[j] += coef * a
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(map(str, r)) for r in self._entries]})"


@dataclass(frozen=True)
class UniqueSolution:
    x: tuple[Fraction, ...]


@dataclass(frozen=True)
class Inconsistent:
    """Proof that ``A x = b`` has no solution.

    ``multipliers`` is a vector ``y`` with ``y^T A = 0`` and ``y^T b = rhs != 0``;
    ``row`` is the index of the zero row of the reduced matrix it came from.
    """

    multipliers: tuple[Fraction, ...]
    rhs: Fraction
    row: int

    def check(self, A: ExactMatrix, b: Sequence[RationalLike]) -> bool:
        combo = A.vecmat(self.multipliers)
        value = sum((y * Fraction(v) for y, v in zip(self.multipliers, b)), Fraction(0))
        return all(c == 0 for c in combo) and value == self.rhs and value != 0


@dataclass(frozen=True)
class Underdetermined:
    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]


SolveResult = Union[UniqueSolution, Inconsistent, Underdetermined]


def _pivot_weight(v: Fraction) -> int:
    return abs(v.numerator) * v.denominator


def solve_exact_linear(A: ExactMatrix, b: Sequence[RationalLike]) -> SolveResult:
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination.

    Row operations are mirrored on an identity block so that an inconsistent
    zero row comes with the combination of original equations producing it.
    """
    if A.rows == 0 or A.cols == 0:
        raise DimensionError("empty system")
    if len(b) != A.rows:
        raise DimensionError(f"right side has length {len(b)}, expected {A.rows}")

    m, n = A.rows, A.cols
    rows = [list(A.row(i)) + [Fraction(b[i])] for i in range(m)]
    track = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]

    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        best = None
        for i in range(r, m):
            v = rows[i][c]
            if v and (best is None or _pivot_weight(v) > _pivot_weight(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        track[r], track[best] = track[best], track[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        track[r] = [v * inv for v in track[r]]
        for i in range(m):
            factor = rows[i][c]
            if i != r and factor:
                rows[i] = [u - factor * v for u, v in zip(rows[i], rows[r])]
                track[i] = [u - factor * v for u, v in zip(track[i], track[r])]
        pivot_cols.append(c)
        r += 1

    for i in range(r, m):
        if rows[i][n] != 0:
            return Inconsistent(tuple(track[i]), rows[i][n], i)

    x = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        x[c] = rows[i][n]
    if len(pivot_cols) == n:
        return UniqueSolution(tuple(x))

    pivot_set = set(pivot_cols)
    kernel = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vec[c] = -rows[i][free]
        kernel.append(tuple(vec))
    return Underdetermined(tuple(x), tuple(kernel))

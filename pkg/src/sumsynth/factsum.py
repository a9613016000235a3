"""Closed forms for sums of ``p(n, n!)`` within fixed degree bounds.

A candidate ``q = sum u[a,b] n^a (n!)^b`` is a running sum of ``p`` exactly
when ``q(n) - q(n-1) = p(n)`` for n >= 2 and ``q(1) = p(1)``.  Using
``(n-1)! = n!/n`` and clearing denominators, the step condition becomes a
polynomial identity in x and y, and because the sequences ``n^a (n!)^b`` are
linearly independent, it must hold coefficient by coefficient.  That gives
an exact linear system in the unknowns ``u[a,b]``; inconsistency is a proof
that no closed form exists within the bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .exactnum import (
    ConsistencyError,
    ExactMatrix,
    Inconsistent,
    SolveResult,
    Underdetermined,
    UniqueSolution,
    solve_exact_linear,
)
from .oracle import verify_closed_form
from .poly import BiPoly, Monomial

DEFAULT_VERIFY_UPTO = 30


@dataclass(frozen=True)
class DegreeBounds:
    deg_x: int
    deg_y: int

    def __post_init__(self):
        if self.deg_x < 0 or self.deg_y < 0:
            raise ValueError("degree bounds must be nonnegative")

    @classmethod
    def default_for(cls, p: BiPoly) -> "DegreeBounds":
        return cls((p.deg_x or 0) + 2, (p.deg_y or 0) + 1)

    def monomials(self) -> list[Monomial]:
        return [(a, b) for b in range(self.deg_y + 1) for a in range(self.deg_x + 1)]

    def covers(self, other: "DegreeBounds") -> bool:
        return self.deg_x >= other.deg_x and self.deg_y >= other.deg_y


@dataclass(frozen=True)
class LinearSystem:
    """Equations ``A u = b`` over the ansatz unknowns, with a label per row."""

    unknowns: tuple[Monomial, ...]
    labels: tuple[object, ...]
    A: ExactMatrix
    b: tuple[Fraction, ...]

    def solve(self) -> SolveResult:
        return solve_exact_linear(self.A, self.b)

    def assemble(self, values) -> BiPoly:
        return BiPoly(dict(zip(self.unknowns, values)))


@dataclass(frozen=True)
class ClosedForm:
    q: BiPoly
    bounds: DegreeBounds
    verified_upto: int


@dataclass(frozen=True)
class NoSolutionWithinBounds:
    bounds: DegreeBounds
    certificate: Inconsistent
    system: LinearSystem

    def check(self) -> bool:
        """Re-verify the certificate against the stored system."""
        return self.certificate.check(self.system.A, self.system.b)

    def witness_equations(self) -> list[tuple[object, Fraction]]:
        """The (label, multiplier) pairs whose combination reads ``0 = nonzero``."""
        return [(lab, y) for lab, y in zip(self.system.labels, self.certificate.multipliers) if y]


SynthesisResult = Union[ClosedForm, NoSolutionWithinBounds]


def telescope_residual(q: BiPoly, p: BiPoly) -> BiPoly:
    """``x^B q - fact_shift(q) - x^B p`` with ``B = deg_y(q)``.

    At ``(n, n!)`` this equals ``n^B (q(n) - q(n-1) - p(n))`` for n >= 2.
    """
    lift = BiPoly.monomial(q.deg_y or 0, 0)
    return lift * q - q.fact_shift() - lift * p


def _step_image(a: int, b: int, big_b: int) -> dict[Monomial, Fraction]:
    """Coefficients of ``x^B x^a y^b - (x-1)^a x^(B-b) y^b``."""
    out: dict[Monomial, Fraction] = {(a + big_b, b): Fraction(1)}
    for i in range(a + 1):
        key = (i + big_b - b, b)
        out[key] = out.get(key, Fraction(0)) - comb(a, i) * (-1) ** (a - i)
    return {k: v for k, v in out.items() if v}


def formal_system(p: BiPoly, bounds: DegreeBounds) -> LinearSystem:
    """Coefficient-wise residual equations plus the n = 1 base case."""
    unknowns = bounds.monomials()
    big_b = bounds.deg_y
    columns = [_step_image(a, b, big_b) for a, b in unknowns]
    target = BiPoly.monomial(big_b, 0) * p
    keys = sorted(set().union(*columns, dict(target.items())))
    rows = [[col.get(k, 0) for col in columns] for k in keys]
    rhs = [target.coeff(*k) for k in keys]
    rows.append([1] * len(unknowns))
    rhs.append(p.eval_at(1, 1))
    labels = tuple(("coeff", k) for k in keys) + (("base", 1),)
    return LinearSystem(tuple(unknowns), labels, ExactMatrix(rows), tuple(Fraction(v) for v in rhs))


def sampled_system(p: BiPoly, bounds: DegreeBounds, n_hi: int) -> LinearSystem:
    """The same conditions imposed pointwise at n = 2..n_hi, plus the base case."""
    unknowns = bounds.monomials()
    rows = [[1] * len(unknowns)]
    rhs = [p.eval_at(1, 1)]
    labels: list[object] = [("base", 1)]
    prev_fact = 1
    for n in range(2, n_hi + 1):
        fact = prev_fact * n
        rows.append([n**a * fact**b - (n - 1) ** a * prev_fact**b for a, b in unknowns])
        rhs.append(p.eval_at(n, fact))
        labels.append(("point", n))
        prev_fact = fact
    return LinearSystem(tuple(unknowns), tuple(labels), ExactMatrix(rows), tuple(Fraction(v) for v in rhs))


def synth_fact_sum(
    p: BiPoly,
    bounds: DegreeBounds | None = None,
    verify_upto: int = DEFAULT_VERIFY_UPTO,
) -> SynthesisResult:
    """Find q within ``bounds`` with ``q(n, n!) = p(1, 1!) + ... + p(n, n!)``."""
    if bounds is None:
        bounds = DegreeBounds.default_for(p)
    system = formal_system(p, bounds)
    sol = system.solve()
    if isinstance(sol, Inconsistent):
        return NoSolutionWithinBounds(bounds, sol, system)
    if isinstance(sol, Underdetermined):
        # the homogeneous system forces q to be constant with q(1) = 0
        raise ConsistencyError(f"ansatz kernel is nontrivial ({len(sol.kernel)} dimensions)")
    assert isinstance(sol, UniqueSolution)
    q = system.assemble(sol.x)
    if not telescope_residual(q, p).is_zero() or q.eval_at(1, 1) != p.eval_at(1, 1):
        raise ConsistencyError("solver output does not satisfy the formal conditions")
    report = verify_closed_form(p, q, verify_upto)
    if not report.ok:
        raise ConsistencyError(f"closed form fails the oracle: {report.mismatch}")
    return ClosedForm(q, bounds, verify_upto)

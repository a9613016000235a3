"""Closed forms for sums of polynomials, the difference operator, and the
membership test for polynomials that are running sums of integer polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .faulhaber import faulhaber_row
from .poly import BiPoly, UniPoly


def _as_uni(p: BiPoly) -> UniPoly:
    return p if isinstance(p, UniPoly) else UniPoly.from_bipoly(p)


def synth_poly_sum(f: BiPoly) -> UniPoly:
    """Return g with ``g(n) = f(1) + ... + f(n)`` for every n >= 1.

    The constant term contributes ``a_0 * n``; each ``a_k n^k`` contributes
    ``a_k`` times the k-th power-sum polynomial.
    """
    f = _as_uni(f)
    g = UniPoly([0, f[0]])
    for k in range(1, (f.degree or 0) + 1):
        a = f[k]
        if a:
            g = g + faulhaber_row(k).poly() * a
    return g


def delta(g: BiPoly) -> UniPoly:
    """``g(x) - g(x - 1)``."""
    g = _as_uni(g)
    return g - g.shift_x()


@dataclass(frozen=True)
class NonIntegralDelta:
    exponent: int
    delta: UniPoly

    def __str__(self) -> str:
        from .syntax import format_canonical

        return (
            f"non-integral coefficient {self.delta[self.exponent]} at n^{self.exponent}"
            f" in delta = {format_canonical(self.delta)}"
        )


@dataclass(frozen=True)
class BaseCaseMismatch:
    g1: Fraction
    f1: Fraction

    def __str__(self) -> str:
        return f"base case mismatch g(1)={self.g1} f(1)={self.f1}"


@dataclass(frozen=True)
class MembershipVerdict:
    accepted: bool
    witness_f: UniPoly | None = None
    reject_reason: NonIntegralDelta | BaseCaseMismatch | None = None

    def __post_init__(self):
        if (self.witness_f is None) == (self.reject_reason is None):
            raise ValueError("exactly one of witness_f and reject_reason must be set")
        if self.accepted != (self.witness_f is not None):
            raise ValueError("accepted must match presence of witness_f")


def membership_sz(g: BiPoly) -> MembershipVerdict:
    """Decide whether ``g(n) = f(1) + ... + f(n)`` for some f with integer coefficients.

    Telescoping makes this a finite check: f must be ``delta(g)``, which
    must have integer coefficients, and the sums must agree at n = 1.
    """
    g = _as_uni(g)
    f = delta(g)
    for exp, c in enumerate(f.coefficients()):
        if c.denominator != 1:
            return MembershipVerdict(False, reject_reason=NonIntegralDelta(exp, f))
    g1, f1 = g(1), f(1)
    if g1 != f1:
        return MembershipVerdict(False, reject_reason=BaseCaseMismatch(g1, f1))
    return MembershipVerdict(True, witness_f=f)

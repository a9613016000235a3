"""Weighted sums ``w_1 f(1) + ... + w_n f(n)`` for integer weight families.

Supported families: a constant, a polynomial in the index, and a periodic
pattern.  Periodic weights give one polynomial per residue class of n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactnum import ConsistencyError
from .poly import BiPoly, UniPoly
from .polysum import synth_poly_sum


@dataclass(frozen=True)
class Constant:
    c: int

    def __call__(self, i: int) -> int:
        return self.c


@dataclass(frozen=True)
class PolynomialWeight:
    w: UniPoly

    def __post_init__(self):
        if not self.w.is_univariate() or not self.w.has_integer_coefficients():
            raise ValueError("polynomial weight needs integer coefficients in n only")

    def __call__(self, i: int) -> Fraction:
        return self.w.eval_at(i, 0)


@dataclass(frozen=True)
class Periodic:
    pattern: tuple[int, ...]

    def __post_init__(self):
        if not self.pattern:
            raise ValueError("periodic pattern must be nonempty")
        object.__setattr__(self, "pattern", tuple(int(v) for v in self.pattern))

    @property
    def period(self) -> int:
        return len(self.pattern)

    def __call__(self, i: int) -> int:
        return self.pattern[(i - 1) % self.period]


WeightSpec = Union[Constant, PolynomialWeight, Periodic]


@dataclass(frozen=True)
class ResidueClosedForms:
    """``forms[r - 1]`` gives the sum for n congruent to r mod period (r = period for 0)."""

    period: int
    forms: tuple[UniPoly, ...]

    def residue(self, n: int) -> int:
        return (n - 1) % self.period + 1

    def form_for(self, n: int) -> UniPoly:
        return self.forms[self.residue(n) - 1]

    def __call__(self, n: int) -> Fraction:
        return self.form_for(n)(n)


def weighted_sum_oracle(p: BiPoly, alpha: WeightSpec, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)
    fact = 1
    for i in range(1, n + 1):
        fact *= i
        total += alpha(i) * p.eval_at(i, fact)
    return total


def synth_weighted_polynomial(f: BiPoly, w: BiPoly) -> UniPoly:
    weight = PolynomialWeight(UniPoly.from_bipoly(w))
    return synth_poly_sum(weight.w * UniPoly.from_bipoly(f))


def synth_weighted_constant(f: BiPoly, c: int) -> UniPoly:
    return synth_poly_sum(f) * c


def synth_weighted_periodic(f: BiPoly, pattern) -> ResidueClosedForms:
    """Per-residue closed forms for a periodic weight pattern.

    Write n = p*m + r.  The full blocks j = 0..m-1 each contribute
    ``block(j) = sum_t pattern[t] f(p*j + t)``; with ``G`` the running sum of
    ``block`` (so G(0) = 0), those add up to ``G(m - 1) + block(0)``.  The
    trailing partial block covers t = 1..r.
    """
    alpha = Periodic(tuple(pattern))
    f = UniPoly.from_bipoly(f)
    p = alpha.period

    block = UniPoly()
    for t, a in enumerate(alpha.pattern, start=1):
        block = block + f.compose_linear(p, t) * a
    full_blocks = synth_poly_sum(block).compose_linear(1, -1) + block(0)

    forms = []
    partial = UniPoly()
    for r in range(1, p + 1):
        partial = partial + f.compose_linear(p, r) * alpha(r)
        in_m = full_blocks + partial
        g_r = in_m.compose_linear(Fraction(1, p), Fraction(-r, p))
        forms.append(g_r)
    result = ResidueClosedForms(p, tuple(forms))

    for r in range(1, p + 1):
        for n in range(r, 5 * p + r + 1, p):
            expected = weighted_sum_oracle(f, alpha, n)
            if result(n) != expected:
                raise ConsistencyError(f"residue form r={r} fails at n={n}")
    return result

"""Sparse polynomials over Q in ``x`` (the index n) and ``y`` (standing for n!)."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .exactnum import RationalLike, int_factorial

Monomial = tuple[int, int]
Scalar = (int, Fraction)


def _clean(terms: Iterable[tuple[Monomial, RationalLike]]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for mono, c in terms:
        if c:
            out[mono] = out.get(mono, Fraction(0)) + c
    return {m: Fraction(c) for m, c in out.items() if c}


class BiPoly:
    """Immutable sparse bivariate polynomial ``sum c[a,b] x^a y^b``.

    Zero coefficients are never stored, so structural equality is
    polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, RationalLike] | None = None):
        self._terms = _clean((terms or {}).items())
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "BiPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: RationalLike) -> "BiPoly":
        return cls._raw(_clean([((0, 0), c)]))

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, a: int, b: int, c: RationalLike = 1) -> "BiPoly":
        return cls._raw(_clean([((a, b), c)]))

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, a: int, b: int = 0) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def deg_x(self) -> int | None:
        return max((a for a, _ in self._terms), default=None)

    @property
    def deg_y(self) -> int | None:
        return max((b for _, b in self._terms), default=None)

    def is_univariate(self) -> bool:
        return all(b == 0 for _, b in self._terms)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, Scalar):
            return self._terms == _clean([((0, 0), other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .syntax import format_canonical

        return f"{type(self).__name__}({format_canonical(self)!r})"

    # -- arithmetic -------------------------------------------------------

    def _result_type(self, other) -> type:
        if isinstance(self, UniPoly) and (isinstance(other, UniPoly) or isinstance(other, Scalar)):
            return UniPoly
        return BiPoly

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, Scalar):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return self._result_type(other)._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return self + (-other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if not other:
                return type(self)._raw({})
            return type(self)._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return self._result_type(other)._raw({m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation and substitution ---------------------------------------

    def eval_fact(self, n: int) -> Fraction:
        """Value at ``x = n``, ``y = n!``."""
        if n < 1:
            raise ValueError("eval_fact needs n >= 1")
        return self.eval_at(n, int_factorial(n))

    def eval_at(self, xv: RationalLike, yv: RationalLike) -> Fraction:
        by_b: dict[int, dict[int, Fraction]] = {}
        for (a, b), c in self._terms.items():
            by_b.setdefault(b, {})[a] = c
        total = Fraction(0)
        for b, row in by_b.items():
            total += _horner(row, xv) * Fraction(yv) ** b
        return total

    def shift_x(self):
        """``q(x - 1, y)``."""
        acc: dict[Monomial, Fraction] = {}
        for (a, b), c in self._terms.items():
            for i in range(a + 1):
                k = (i, b)
                acc[k] = acc.get(k, 0) + c * comb(a, i) * (-1) ** (a - i)
        return type(self)._raw({m: v for m, v in acc.items() if v})

    def fact_shift(self) -> "BiPoly":
        """``x^B q(x - 1, y / x)`` with ``B = deg_y``; maps n! to n * (n-1)!."""
        big_b = self.deg_y or 0
        acc: dict[Monomial, Fraction] = {}
        for (a, b), c in self._terms.items():
            lift = big_b - b
            for i in range(a + 1):
                k = (i + lift, b)
                acc[k] = acc.get(k, 0) + c * comb(a, i) * (-1) ** (a - i)
        return BiPoly._raw({m: v for m, v in acc.items() if v})


def _horner(coeffs: Mapping[int, Fraction], xv: RationalLike) -> Fraction:
    if not coeffs:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(max(coeffs), -1, -1):
        acc = acc * xv + coeffs.get(k, 0)
    return acc


class UniPoly(BiPoly):
    """A :class:`BiPoly` with no ``y``: a polynomial in n alone."""

    __slots__ = ()

    def __init__(self, coeffs: Mapping[int, RationalLike] | Sequence[RationalLike] | None = None):
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        super().__init__({(k, 0): c for k, c in coeffs.items()})

    @classmethod
    def from_bipoly(cls, q: BiPoly) -> "UniPoly":
        if not q.is_univariate():
            raise ValueError("polynomial involves n!")
        return cls._raw(dict(q._terms))

    @classmethod
    def y(cls):
        raise TypeError("UniPoly has no factorial variable")

    @property
    def degree(self) -> int | None:
        return self.deg_x

    def __getitem__(self, k: int) -> Fraction:
        return self.coeff(k, 0)

    def coefficients(self) -> list[Fraction]:
        """Dense ascending coefficient list (empty for zero)."""
        d = self.degree
        return [] if d is None else [self[k] for k in range(d + 1)]

    def __call__(self, n: RationalLike) -> Fraction:
        return _horner({a: c for (a, _), c in self._terms.items()}, n)

    def compose_linear(self, scale: RationalLike, offset: RationalLike) -> "UniPoly":
        """``p(scale * x + offset)``."""
        scale, offset = Fraction(scale), Fraction(offset)
        acc: dict[Monomial, Fraction] = {}
        for (a, _), c in self._terms.items():
            for i in range(a + 1):
                k = (i, 0)
                acc[k] = acc.get(k, 0) + c * comb(a, i) * scale**i * offset ** (a - i)
        return UniPoly._raw({m: v for m, v in acc.items() if v})


def poly_arith(a: BiPoly, b: BiPoly, op: str) -> BiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def eval_uni(p: UniPoly, n: RationalLike) -> Fraction:
    return UniPoly.from_bipoly(p)(n)


def eval_fact(q: BiPoly, n: int) -> Fraction:
    return q.eval_fact(n)


def shift_x(q: BiPoly) -> BiPoly:
    return q.shift_x()


def fact_shift(q: BiPoly) -> BiPoly:
    return q.fact_shift()


X = BiPoly.x()
Y = BiPoly.y()
N = UniPoly([0, 1])

"""Text format for polynomials in ``n`` and ``n!``.

Grammar (``^`` binds tighter than unary minus, then ``*``, then ``+``/``-``)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := INT | INT '/' INT | 'n' | 'n!' | '(' expr ')'

The only division allowed is inside a rational literal ``p/q``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import BiPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos
        self.text = text

    def pointer(self) -> str:
        """The input with a caret under the offending position."""
        return f"{self.text}\n{' ' * self.pos}^"


@dataclass(frozen=True)
class Token:
    kind: str  # INT, RAT, N, FACT, OP, END
    value: object
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+\s*/\s*\d+)
  | (?P<int>\d+)
  | (?P<fact>n\s*!)
  | (?P<n>n)
  | (?P<op>[-+*^()])
  | (?P<slash>/)
  | (?P<bang>!)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "rat":
            num, den = (int(s) for s in m.group().split("/"))
            if den == 0:
                raise ParseError("zero denominator in rational literal", pos, text)
            tokens.append(Token("RAT", Fraction(num, den), pos))
        elif kind == "int":
            tokens.append(Token("INT", int(m.group()), pos))
        elif kind == "fact":
            tokens.append(Token("FACT", None, pos))
        elif kind == "n":
            tokens.append(Token("N", None, pos))
        elif kind == "op":
            tokens.append(Token("OP", m.group(), pos))
        elif kind == "slash":
            raise ParseError("division is only allowed inside a rational literal p/q", pos, text)
        elif kind == "bang":
            raise ParseError("factorial applies only to n", pos, text)
        pos = m.end()
    tokens.append(Token("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "OP" and self.tok.value == op:
            self.i += 1
            return True
        return False

    def parse(self) -> BiPoly:
        if self.tok.kind == "END":
            raise self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "END":
            raise self.error(f"unexpected {self._describe(self.tok)}")
        return result

    def expr(self) -> BiPoly:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> BiPoly:
        acc = self.unary()
        while self.accept("*"):
            acc = acc * self.unary()
        return acc

    def unary(self) -> BiPoly:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> BiPoly:
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "INT":
                raise self.error("exponent must be a nonnegative integer literal")
            self.i += 1
            base = base ** tok.value
            if self.tok.kind == "OP" and self.tok.value == "^":
                raise self.error("chained exponent; use parentheses")
        return base

    def atom(self) -> BiPoly:
        tok = self.tok
        if tok.kind in ("INT", "RAT"):
            self.i += 1
            return BiPoly.const(tok.value)
        if tok.kind == "N":
            self.i += 1
            return BiPoly.x()
        if tok.kind == "FACT":
            self.i += 1
            return BiPoly.y()
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return inner
        raise self.error(f"unexpected {self._describe(tok)}")

    @staticmethod
    def _describe(tok: Token) -> str:
        if tok.kind == "END":
            return "end of input"
        if tok.kind == "OP":
            return f"{tok.value!r}"
        return {"INT": "number", "RAT": "rational literal", "N": "'n'", "FACT": "'n!'"}[tok.kind]


def parse_poly(text: str) -> BiPoly:
    """Parse ``text`` into a :class:`BiPoly` (``n`` -> x, ``n!`` -> y)."""
    return _Parser(text).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("n" if a == 1 else f"n^{a}")
    if b:
        parts.append("n!" if b == 1 else f"n!^{b}")
    return "*".join(parts)


def format_canonical(q: BiPoly) -> str:
    """Deterministic text: terms by descending n!-degree, then n-degree."""
    terms = sorted(q.items(), key=lambda t: (-t[0][1], -t[0][0]))
    if not terms:
        return "0"
    out = []
    for idx, ((a, b), c) in enumerate(terms):
        mono = _format_monomial(a, b)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)

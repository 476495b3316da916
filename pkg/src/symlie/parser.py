"""Expression parser and canonical printer for polynomials over Q(i).

Grammar (UTF-8, whitespace insignificant, no implicit multiplication):

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'i' | identifier | '(' expr ')'
    rational := int ('/' uint)?

Identifiers match [A-Za-z][A-Za-z0-9_]* and may not be the reserved literal
'i'.  As a convenience extension this parser also accepts a unary '+'/'-'
in front of any term ("-i", "-x1^2"); the printer never relies on it and
emits strictly grammar-conforming text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .poly import PolyRing, Polynomial
from .scalar import I, ONE, Q, Scalar


class ParseError(ValueError):
    """Syntax or name error, carrying 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[+\-*/^()])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str  # 'number' | 'ident' | one of '+-*/^()' | 'end'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind != "ws":
            tok_kind = lexeme if kind == "op" else kind
            tokens.append(_Token(tok_kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Optional[PolyRing]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring if ring is not None else PolyRing.of("_")
        self.allow_vars = ring is not None

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return self.advance()

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.advance().kind == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek().kind in "+-":
            op = self.advance().kind
            q = self.term()
            p = p - q if op == "-" else p + q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek().kind == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("number")
            p = p ** int(tok.text)
        return p

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            num = int(tok.text)
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("number")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.line, den_tok.column)
                return self.ring.constant(Scalar(Q(num, den)))
            return self.ring.constant(Scalar(Q(num)))
        if tok.kind == "ident":
            self.advance()
            if tok.text == "i":
                return self.ring.constant(I)
            if not self.allow_vars:
                raise ParseError(f"undeclared identifier {tok.text!r}", tok.line, tok.column)
            try:
                index = self.ring.index_of(tok.text)
            except ValueError:
                raise ParseError(f"undeclared identifier {tok.text!r}",
                                 tok.line, tok.column) from None
            return self.ring.variable(index)
        if tok.kind == "(":
            self.advance()
            p = self.expr()
            self.expect(")")
            return p
        if tok.kind in "+-":
            # unary sign inside a parenthesised expression start
            return self.expr()
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.column)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse an expression into expanded sparse normal form."""
    return _Parser(text, ring).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse a constant expression (matrix entries; 'i' allowed)."""
    p = _Parser(text, None).parse()
    n = p.ring.arity
    return p.terms.get((0,) * n, Scalar(0))


# -- printing ---------------------------------------------------------------


def _format_monomial(ring: PolyRing, exps) -> str:
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _display_positive(c: Scalar) -> bool:
    if c.re:
        return c.re > 0
    return c.im > 0


def _format_coefficient(c: Scalar, mono: str, leading: bool) -> str:
    """Render one term, sign already stripped unless leading."""
    if not c.im:
        num = str(c.re)
        if not mono:
            return num
        if c.re == 1:
            return mono
        if c.re == -1:
            return f"-1*{mono}"  # leading negative unit keeps grammar-valid form
        return f"{num}*{mono}"
    if not c.re:
        if c.im == 1:
            return f"i*{mono}" if mono else "i"
        if c.im == -1:
            return f"-1*i*{mono}" if mono else "-1*i"
        istr = f"{c.im}*i"
        return f"{istr}*{mono}" if mono else istr
    body = f"({c})"
    return f"{body}*{mono}" if mono else body


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending grevlex terms, grammar-conforming."""
    if not p.terms:
        return "0"
    pieces = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(p.ring, m)
        mixed = bool(c.re) and bool(c.im)
        if idx == 0:
            pieces.append(_format_coefficient(c, mono, leading=True))
        elif mixed:
            pieces.append(f" + {_format_coefficient(c, mono, leading=False)}")
        elif _display_positive(c):
            pieces.append(f" + {_format_coefficient(c, mono, leading=False)}")
        else:
            pieces.append(f" - {_format_coefficient(-c, mono, leading=False)}")
    return "".join(pieces)

"""Text format for gross-numbers: lexer, parsers, canonical printer.

The infinite unit is written ``G1`` (the glyph ``①`` is accepted as an
alias).  Number literals::

    number      :=  [sign] term ( sign term )*
    term        :=  coefficient '*' base  |  coefficient  |  base
    base        :=  'G1' [ '^' '{' number '}' ]
    coefficient :=  decimal  |  integer '/' integer      (exact values)

so ``17.21*G1^{52.4*G1 - 72.1} + 134*G1^{81.43} + 7.02`` is a three-term
numeral.  A bare coefficient means ``c*G1^0``; a bare ``G1`` means
``1*G1^1``.  Exponent braces nest up to a configurable depth cap.

Expressions add variables, calls, parentheses and operators with
precedence ``^`` (right-associative) over unary minus over ``* /`` over
``+ -`` over comparisons.  After ``^`` a braced group is allowed, so
``G1^{-1}`` works the same in literals and expressions.

Statements (one per line in session scripts; '#' starts a comment)::

    let <name> = <expression>
    def <name>(<param>) = <expression>
    def <name>(<param>) = { <expr> if <param> <rel> <expr> ; ... }
    <expression>

The canonical printer emits terms in strictly decreasing grosspower order;
exact mode prints coefficients as decimals when the denominator allows and
as fractions otherwise, and its output re-parses to the identical value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from . import core
from .core import GrossNumber, ONE, ZERO, from_rational, normalize
from .errors import DepthLimitExceeded, ParseError, UnknownCharacter

DEFAULT_DEPTH_CAP = 8

_KEYWORDS = frozenset({"let", "def", "if"})


class TokenKind(Enum):
    RATIONAL_LIT = "rational"
    DECIMAL_LIT = "decimal"
    GROSSONE = "grossone"
    IDENT = "ident"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    LBRACE = "{"
    RBRACE = "}"
    COMMA = ","
    ASSIGN = "="
    KEYWORD = "keyword"
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="
    SEMICOLON = ";"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    column: int


_SINGLE_CHAR = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    ",": TokenKind.COMMA,
    "=": TokenKind.ASSIGN,
    ";": TokenKind.SEMICOLON,
    "≤": TokenKind.LE,
    "≥": TokenKind.GE,
}


def lex(text: str, *, fraction_literals: bool = False) -> list[Token]:
    """Tokenize UTF-8 text; error positions are 1-based line/column.

    With ``fraction_literals`` enabled (the number-literal grammar),
    adjacent ``digits/digits`` becomes a single rational token; otherwise
    '/' is always the division operator.
    """
    tokens: list[Token] = []
    line, column = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch in " \t\r":
            column += 1
            i += 1
            continue
        start_line, start_column = line, column
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            kind = TokenKind.DECIMAL_LIT
            if j < n and text[j] == "." and j + 1 < n and "0" <= text[j + 1] <= "9":
                j += 1
                while j < n and "0" <= text[j] <= "9":
                    j += 1
            elif (
                fraction_literals
                and j < n
                and text[j] == "/"
                and j + 1 < n
                and "0" <= text[j + 1] <= "9"
            ):
                j += 1
                while j < n and "0" <= text[j] <= "9":
                    j += 1
                kind = TokenKind.RATIONAL_LIT
            lexeme = text[i:j]
            tokens.append(Token(kind, lexeme, start_line, start_column))
            column += j - i
            i = j
            continue
        if (ch.isalpha() and ch != "①") or ch == "_":
            j = i
            while j < n and ((text[j].isalnum() and text[j] != "①") or text[j] == "_"):
                j += 1
            lexeme = text[i:j]
            if lexeme == "G1":
                kind = TokenKind.GROSSONE
            elif lexeme in _KEYWORDS:
                kind = TokenKind.KEYWORD
            else:
                kind = TokenKind.IDENT
            tokens.append(Token(kind, lexeme, start_line, start_column))
            column += j - i
            i = j
            continue
        if ch == "①":
            tokens.append(Token(TokenKind.GROSSONE, ch, start_line, start_column))
            column += 1
            i += 1
            continue
        if ch == "<" or ch == ">":
            if i + 1 < n and text[i + 1] == "=":
                kind = TokenKind.LE if ch == "<" else TokenKind.GE
                tokens.append(Token(kind, ch + "=", start_line, start_column))
                column += 2
                i += 2
            else:
                kind = TokenKind.LT if ch == "<" else TokenKind.GT
                tokens.append(Token(kind, ch, start_line, start_column))
                column += 1
                i += 1
            continue
        if ch in _SINGLE_CHAR:
            tokens.append(Token(_SINGLE_CHAR[ch], ch, start_line, start_column))
            column += 1
            i += 1
            continue
        raise UnknownCharacter(f"unexpected character {ch!r}", start_line, start_column)
    tokens.append(Token(TokenKind.EOF, "", line, column))
    return tokens


# ------------------------------------------------------------------ AST


class Ast:
    """Base class for parsed expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Literal(Ast):
    value: GrossNumber


@dataclass(frozen=True)
class GrossoneSymbol(Ast):
    pass


@dataclass(frozen=True)
class Var(Ast):
    name: str


@dataclass(frozen=True)
class Unary(Ast):
    op: str
    operand: Ast


@dataclass(frozen=True)
class Binary(Ast):
    op: str
    left: Ast
    right: Ast


@dataclass(frozen=True)
class Call(Ast):
    name: str
    args: Tuple[Ast, ...]


@dataclass(frozen=True)
class Compare(Ast):
    op: str
    left: Ast
    right: Ast


@dataclass(frozen=True)
class Branch:
    """One piecewise branch: ``body`` applies when param <rel> breakpoint."""

    body: Ast
    relation: str
    breakpoint: Ast


@dataclass(frozen=True)
class PiecewiseDef(Ast):
    name: str
    param: str
    branches: Tuple[Branch, ...]
    body: Optional[Ast] = None  # set for plain (non-piecewise) definitions


@dataclass(frozen=True)
class LetBinding(Ast):
    name: str
    expr: Ast


_RELOP_TOKENS = {
    TokenKind.LT: "<",
    TokenKind.LE: "<=",
    TokenKind.ASSIGN: "=",
    TokenKind.GE: ">=",
    TokenKind.GT: ">",
}


class _TokenStream:
    def __init__(self, tokens: list[Token], depth_cap: int):
        self.tokens = tokens
        self.index = 0
        self.depth_cap = depth_cap

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind is not TokenKind.EOF:
            self.index += 1
        return token

    def match(self, *kinds: TokenKind) -> Optional[Token]:
        if self.peek().kind in kinds:
            return self.advance()
        return None

    def expect(self, kind: TokenKind, what: str) -> Token:
        token = self.peek()
        if token.kind is not kind:
            raise ParseError(
                f"expected {what}, found {token.lexeme!r}" if token.lexeme else f"expected {what}",
                token.line,
                token.column,
            )
        return self.advance()

    def fail(self, message: str) -> ParseError:
        token = self.peek()
        return ParseError(message, token.line, token.column)


def _token_fraction(token: Token) -> Fraction:
    if token.kind is TokenKind.RATIONAL_LIT:
        numerator, denominator = token.lexeme.split("/")
        if int(denominator) == 0:
            raise ParseError("zero denominator in rational literal", token.line, token.column)
        return Fraction(int(numerator), int(denominator))
    return Fraction(token.lexeme)


# ------------------------------------------------------- number literals


def parse_number(text: str, *, depth_cap: int = DEFAULT_DEPTH_CAP) -> GrossNumber:
    """Parse a gross-number literal to its canonical value.

    >>> parse_number("G1^{2} - 2*G1 + 0.5") == (
    ...     core.GROSSONE ** 2 - 2 * core.GROSSONE + Fraction(1, 2))
    True
    """
    stream = _TokenStream(lex(text, fraction_literals=True), depth_cap)
    value = _parse_literal(stream, 0)
    stream.expect(TokenKind.EOF, "end of input")
    return value


def _parse_literal(stream: _TokenStream, depth: int) -> GrossNumber:
    pairs: list[tuple[Fraction, GrossNumber]] = []
    sign = Fraction(1)
    token = stream.match(TokenKind.PLUS, TokenKind.MINUS)
    if token is not None and token.kind is TokenKind.MINUS:
        sign = Fraction(-1)
    while True:
        coefficient, exponent = _parse_literal_term(stream, depth)
        pairs.append((sign * coefficient, exponent))
        token = stream.match(TokenKind.PLUS, TokenKind.MINUS)
        if token is None:
            break
        sign = Fraction(-1) if token.kind is TokenKind.MINUS else Fraction(1)
    return normalize(pairs)


def _parse_literal_term(stream: _TokenStream, depth: int) -> tuple[Fraction, GrossNumber]:
    token = stream.peek()
    if token.kind in (TokenKind.RATIONAL_LIT, TokenKind.DECIMAL_LIT):
        stream.advance()
        coefficient = _token_fraction(token)
        if stream.match(TokenKind.STAR):
            return coefficient, _parse_literal_exponent(stream, depth)
        return coefficient, ZERO
    if token.kind is TokenKind.GROSSONE:
        return Fraction(1), _parse_literal_exponent(stream, depth)
    raise stream.fail("expected a coefficient or G1")


def _parse_literal_exponent(stream: _TokenStream, depth: int) -> GrossNumber:
    stream.expect(TokenKind.GROSSONE, "G1")
    if stream.match(TokenKind.CARET):
        brace = stream.expect(TokenKind.LBRACE, "'{'")
        if depth + 1 > stream.depth_cap:
            raise DepthLimitExceeded(
                f"exponent braces nested deeper than {stream.depth_cap}",
                brace.line,
                brace.column,
            )
        inner = _parse_literal(stream, depth + 1)
        stream.expect(TokenKind.RBRACE, "'}'")
        return inner
    return ONE


# ----------------------------------------------------------- expressions


def parse_expression(text: str, *, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ast:
    stream = _TokenStream(lex(text), depth_cap)
    ast = _parse_compare(stream, 0)
    stream.expect(TokenKind.EOF, "end of input")
    return ast


def parse_statement(text: str, *, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ast:
    """Parse one session statement: let, def, or a bare expression."""
    stream = _TokenStream(lex(text), depth_cap)
    token = stream.peek()
    if token.kind is TokenKind.KEYWORD and token.lexeme == "let":
        stream.advance()
        name = stream.expect(TokenKind.IDENT, "a name").lexeme
        stream.expect(TokenKind.ASSIGN, "'='")
        expr = _parse_compare(stream, 0)
        stream.expect(TokenKind.EOF, "end of input")
        return LetBinding(name, expr)
    if token.kind is TokenKind.KEYWORD and token.lexeme == "def":
        ast = _parse_def(stream)
        stream.expect(TokenKind.EOF, "end of input")
        return ast
    ast = _parse_compare(stream, 0)
    stream.expect(TokenKind.EOF, "end of input")
    return ast


def _parse_def(stream: _TokenStream) -> PiecewiseDef:
    stream.advance()  # def
    name = stream.expect(TokenKind.IDENT, "a function name").lexeme
    stream.expect(TokenKind.LPAREN, "'('")
    param = stream.expect(TokenKind.IDENT, "a parameter name").lexeme
    stream.expect(TokenKind.RPAREN, "')'")
    stream.expect(TokenKind.ASSIGN, "'='")
    if not stream.match(TokenKind.LBRACE):
        body = _parse_additive(stream, 0)
        return PiecewiseDef(name, param, (), body)
    branches: list[Branch] = []
    while True:
        body = _parse_additive(stream, 0)
        if_token = stream.peek()
        if not (if_token.kind is TokenKind.KEYWORD and if_token.lexeme == "if"):
            raise stream.fail("expected 'if' after the branch expression")
        stream.advance()
        cond_var = stream.expect(TokenKind.IDENT, "the parameter name")
        if cond_var.lexeme != param:
            raise ParseError(
                f"branch condition must test the parameter {param!r}",
                cond_var.line,
                cond_var.column,
            )
        rel_token = stream.peek()
        relation = _RELOP_TOKENS.get(rel_token.kind)
        if relation is None:
            raise stream.fail("expected a comparison operator")
        stream.advance()
        breakpoint_expr = _parse_additive(stream, 0)
        branches.append(Branch(body, relation, breakpoint_expr))
        if stream.match(TokenKind.SEMICOLON):
            continue
        stream.expect(TokenKind.RBRACE, "';' or '}'")
        break
    return PiecewiseDef(name, param, tuple(branches))


def _parse_compare(stream: _TokenStream, depth: int) -> Ast:
    left = _parse_additive(stream, depth)
    relation = _RELOP_TOKENS.get(stream.peek().kind)
    if relation is not None:
        stream.advance()
        right = _parse_additive(stream, depth)
        return Compare(relation, left, right)
    return left


def _parse_additive(stream: _TokenStream, depth: int) -> Ast:
    left = _parse_multiplicative(stream, depth)
    while True:
        token = stream.match(TokenKind.PLUS, TokenKind.MINUS)
        if token is None:
            return left
        right = _parse_multiplicative(stream, depth)
        left = Binary(token.lexeme, left, right)


def _parse_multiplicative(stream: _TokenStream, depth: int) -> Ast:
    left = _parse_unary(stream, depth)
    while True:
        token = stream.match(TokenKind.STAR, TokenKind.SLASH)
        if token is None:
            return left
        right = _parse_unary(stream, depth)
        left = Binary(token.lexeme, left, right)


def _parse_unary(stream: _TokenStream, depth: int) -> Ast:
    if stream.match(TokenKind.MINUS):
        return Unary("-", _parse_unary(stream, depth))
    return _parse_power(stream, depth)


def _parse_power(stream: _TokenStream, depth: int) -> Ast:
    base = _parse_atom(stream, depth)
    if stream.match(TokenKind.CARET):
        return Binary("^", base, _parse_exponent_operand(stream, depth))
    return base


def _parse_exponent_operand(stream: _TokenStream, depth: int) -> Ast:
    brace = stream.match(TokenKind.LBRACE)
    if brace is not None:
        if depth + 1 > stream.depth_cap:
            raise DepthLimitExceeded(
                f"exponent braces nested deeper than {stream.depth_cap}",
                brace.line,
                brace.column,
            )
        inner = _parse_additive(stream, depth + 1)
        stream.expect(TokenKind.RBRACE, "'}'")
        return inner
    return _parse_unary(stream, depth)


def _parse_atom(stream: _TokenStream, depth: int) -> Ast:
    token = stream.peek()
    if token.kind is TokenKind.DECIMAL_LIT:
        stream.advance()
        return Literal(from_rational(_token_fraction(token)))
    if token.kind is TokenKind.GROSSONE:
        stream.advance()
        return GrossoneSymbol()
    if token.kind is TokenKind.IDENT:
        stream.advance()
        if stream.match(TokenKind.LPAREN):
            args: list[Ast] = []
            if stream.peek().kind is not TokenKind.RPAREN:
                args.append(_parse_compare(stream, depth))
                while stream.match(TokenKind.COMMA):
                    args.append(_parse_compare(stream, depth))
            stream.expect(TokenKind.RPAREN, "')'")
            return Call(token.lexeme, tuple(args))
        return Var(token.lexeme)
    if token.kind is TokenKind.LPAREN:
        stream.advance()
        inner = _parse_compare(stream, depth)
        stream.expect(TokenKind.RPAREN, "')'")
        return inner
    raise stream.fail("expected an expression")


# -------------------------------------------------------------- printing


def print_canonical(x: GrossNumber, digits: Optional[int] = None) -> str:
    """Render a gross-number in the literal grammar.

    With ``digits=None`` (exact mode) the text re-parses to the identical
    value; with an integer, coefficients are rounded to that many decimal
    places for display only.

    >>> print_canonical(core.GROSSONE ** 2 - 1)
    'G1^{2} - 1'
    """
    if not x.terms:
        return "0"
    parts: list[str] = []
    for index, term in enumerate(x.terms):
        negative = term.coefficient < 0
        body = _term_text(-term.coefficient if negative else term.coefficient, term.exponent, digits)
        if index == 0:
            parts.append("-" + body if negative else body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


def _term_text(coefficient: Fraction, exponent: GrossNumber, digits: Optional[int]) -> str:
    if not exponent.terms:
        return _coefficient_text(coefficient, digits)
    if exponent == ONE:
        base = "G1"
    else:
        base = "G1^{" + print_canonical(exponent, digits) + "}"
    if coefficient == 1:
        return base
    return _coefficient_text(coefficient, digits) + "*" + base


def _coefficient_text(q: Fraction, digits: Optional[int]) -> str:
    if digits is not None:
        scaled = round(q * 10**digits)
        text = _place_point(scaled, digits)
        return text
    if q.denominator == 1:
        return str(q.numerator)
    twos = _multiplicity(q.denominator, 2)
    fives = _multiplicity(q.denominator, 5)
    if q.denominator == 2**twos * 5**fives:
        scale = max(twos, fives)
        return _place_point(q.numerator * 10**scale // q.denominator, scale)
    return f"{q.numerator}/{q.denominator}"


def _place_point(scaled: int, scale: int) -> str:
    if scale == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    text = f"{sign}{scaled // 10**scale}.{scaled % 10**scale:0{scale}d}"
    text = text.rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def _multiplicity(n: int, p: int) -> int:
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count

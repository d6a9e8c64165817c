"""Parser for textual problem statements of the form

    omega( lambda^k / ((1 - x1*lambda) * (1 - q^2*t*lambda) * (1 - y/lambda)) )

The elimination variable (lambda by default, overridable) must appear in
every denominator factor with net exponent +1 (an x-type factor) or -1
(a y-type factor); everything multiplying it is the factor's letter, an
arbitrary monomial in other variables.  The numerator fixes k.

Two error types keep diagnostics sharp: ParseError for text that does not
match the grammar (with line/column and what was expected), and
StructureError for well-formed text describing a shape the evaluators do
not handle (wrong elimination-variable exponent, negative k, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Monomial
from .omega import OmegaProblem
from .symfun import Alphabet


class StructureError(ValueError):
    """Grammatically valid input describing an unsupported problem shape."""


class ParseError(ValueError):
    """Input that does not match the expression grammar."""

    def __init__(self, message: str, line: int, col: int, found: str = ""):
        self.line = line
        self.col = col
        self.found = found
        where = f"{line}:{col}: {message}"
        if found:
            where += f" (found {found!r})"
        super().__init__(where)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_SYMBOLS = {"(": "LPAREN", ")": "RPAREN", "*": "STAR", "/": "SLASH",
            "^": "CARET", "-": "MINUS", ",": "COMMA"}


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        kind = _SYMBOLS.get(ch)
        if kind:
            tokens.append(_Token(kind, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(_Token("INT", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", src[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.line, tok.col,
                             tok.text or "end of input")
        return self.advance()


@dataclass(frozen=True)
class OmegaExpressionAST:
    """Parsed problem statement: k, the elimination variable's name, and the
    denominator factors as (letter, sign) pairs in source order, with sign
    +1 for x-type factors and -1 for y-type factors."""

    k: int
    lambda_name: str
    factors: tuple[tuple[Monomial, int], ...]

    def x_letters(self) -> tuple[Monomial, ...]:
        return tuple(letter for letter, sign in self.factors if sign == 1)

    def y_letters(self) -> tuple[Monomial, ...]:
        return tuple(letter for letter, sign in self.factors if sign == -1)

    def problem(self) -> OmegaProblem:
        return OmegaProblem(self.k, Alphabet(self.x_letters()), Alphabet(self.y_letters()))

    def render(self) -> str:
        """Canonical source text; parsing it back gives an equal AST."""
        lam = self.lambda_name
        if self.k == 0:
            numer = "1" if lam == "lambda" else f"{lam}^0"
        elif self.k == 1:
            numer = lam
        else:
            numer = f"{lam}^{self.k}"
        rendered = []
        for letter, sign in self.factors:
            body = letter.to_text()  # "1" for the constant letter
            rendered.append(f"1-{body}*{lam}" if sign == 1 else f"1-{body}/{lam}")
        if len(rendered) == 1:
            denom = f"({rendered[0]})"
        else:
            denom = "(" + "*".join(f"({f})" for f in rendered) + ")"
        return f"omega({numer}/{denom})"


def _parse_atom(parser: _Parser, divided: bool) -> tuple[Optional[str], int]:
    """One multiplicand inside a factor: a variable with an optional integer
    exponent, or a literal 1.  Returns (name, net exponent); name is None
    for the literal 1."""
    tok = parser.peek()
    if tok.kind == "INT":
        if tok.text != "1":
            raise ParseError("expected a variable name or '1'", tok.line, tok.col, tok.text)
        parser.advance()
        return None, 0
    name_tok = parser.expect("NAME", "a variable name")
    exp = 1
    if parser.peek().kind == "CARET":
        parser.advance()
        sign = 1
        if parser.peek().kind == "MINUS":
            parser.advance()
            sign = -1
        int_tok = parser.expect("INT", "an integer exponent")
        exp = sign * int(int_tok.text)
    return name_tok.text, -exp if divided else exp


def _parse_factor(parser: _Parser) -> list[tuple[Optional[str], int, bool]]:
    """One denominator factor: ``1 - atom {*|/ atom}``; returns the raw
    atoms as (name, net exponent, was_divided)."""
    parser.expect("INT", "'1'")
    # (the token text was checked to be an INT; insist on the literal 1)
    one = parser.tokens[parser.pos - 1]
    if one.text != "1":
        raise ParseError("expected '1'", one.line, one.col, one.text)
    parser.expect("MINUS", "'-'")
    atoms: list[tuple[Optional[str], int, bool]] = []
    name, net = _parse_atom(parser, divided=False)
    atoms.append((name, net, False))
    while parser.peek().kind in ("STAR", "SLASH"):
        op = parser.advance()
        divided = op.kind == "SLASH"
        name, net = _parse_atom(parser, divided=divided)
        atoms.append((name, net, divided))
    return atoms


def _parse_denominator(parser: _Parser) -> list[list[tuple[Optional[str], int, bool]]]:
    factors = []
    parser.expect("LPAREN", "'('")
    if parser.peek().kind == "LPAREN":
        # Parenthesized product wrapped in one more pair of parentheses.
        parser.expect("LPAREN", "'('")
        factors.append(_parse_factor(parser))
        parser.expect("RPAREN", "')'")
        while parser.peek().kind == "STAR":
            parser.advance()
            parser.expect("LPAREN", "'('")
            factors.append(_parse_factor(parser))
            parser.expect("RPAREN", "')'")
        parser.expect("RPAREN", "')'")
    else:
        factors.append(_parse_factor(parser))
        parser.expect("RPAREN", "')'")
        while parser.peek().kind == "STAR":
            parser.advance()
            parser.expect("LPAREN", "'('")
            factors.append(_parse_factor(parser))
            parser.expect("RPAREN", "')'")
    return factors


def _parse_numerator(parser: _Parser) -> tuple[int, Optional[str]]:
    tok = parser.peek()
    if tok.kind == "INT":
        if tok.text != "1":
            raise ParseError("expected '1' or a power of the elimination variable",
                             tok.line, tok.col, tok.text)
        parser.advance()
        return 0, None
    name_tok = parser.expect("NAME", "'1' or the elimination variable")
    k = 1
    if parser.peek().kind == "CARET":
        parser.advance()
        if parser.peek().kind == "MINUS":
            raise StructureError("the numerator exponent k must be >= 0")
        int_tok = parser.expect("INT", "an integer exponent")
        k = int(int_tok.text)
    return k, name_tok.text


def parse_expression(src: str, lambda_name: Optional[str] = None) -> OmegaExpressionAST:
    """Parse a full problem statement.

    ``lambda_name`` fixes the expected elimination variable; when omitted it
    is taken from the numerator, falling back to "lambda" if the numerator
    is the literal 1.
    """
    parser = _Parser(_tokenize(src))
    head = parser.expect("NAME", "'omega'")
    if head.text != "omega":
        raise ParseError("expected 'omega'", head.line, head.col, head.text)
    parser.expect("LPAREN", "'('")
    k, numerator_lambda = _parse_numerator(parser)
    parser.expect("SLASH", "'/'")
    raw_factors = _parse_denominator(parser)
    parser.expect("RPAREN", "')'")
    parser.expect("EOF", "end of input")

    if lambda_name and numerator_lambda and numerator_lambda != lambda_name:
        raise StructureError(
            f"numerator uses {numerator_lambda!r} but the elimination variable "
            f"was declared as {lambda_name!r}")
    lam = numerator_lambda or lambda_name or "lambda"

    factors: list[tuple[Monomial, int]] = []
    for atoms in raw_factors:
        lam_net = 0
        letter_exps: dict[str, int] = {}
        for name, net, divided in atoms:
            if name is None:
                continue
            if name == lam:
                lam_net += net
            else:
                if divided:
                    raise StructureError(
                        f"only the elimination variable {lam!r} may be divided by, found /{name}")
                letter_exps[name] = letter_exps.get(name, 0) + net
        if lam_net not in (1, -1):
            raise StructureError(
                f"each denominator factor needs the elimination variable {lam!r} "
                f"with net exponent +1 or -1, got {lam_net}")
        factors.append((Monomial(letter_exps), lam_net))

    if not any(sign == 1 for _, sign in factors):
        raise StructureError(
            "at least one factor of the form (1 - letter*" + lam + ") is required")
    return OmegaExpressionAST(k, lam, tuple(factors))


def parse_letter(src: str) -> Monomial:
    """Parse one alphabet letter: a product of variables with optional
    integer exponents, or the literal 1 (e.g. "x1", "q^2*t", "1")."""
    parser = _Parser(_tokenize(src))
    exps: dict[str, int] = {}
    name, net = _parse_atom(parser, divided=False)
    if name is not None:
        exps[name] = exps.get(name, 0) + net
    while parser.peek().kind == "STAR":
        parser.advance()
        name, net = _parse_atom(parser, divided=False)
        if name is not None:
            exps[name] = exps.get(name, 0) + net
    parser.expect("EOF", "end of letter")
    return Monomial(exps)

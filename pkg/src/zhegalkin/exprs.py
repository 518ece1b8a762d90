"""Boolean expression parsing and translation into ANF.

Grammar (binary operators left-associative, loosest first):

    expr  := or
    or    := xor ("|" xor)*
    xor   := and ("^" and)*
    and   := unary ("&" unary)*
    unary := "!" unary | atom
    atom  := "0" | "1" | "x" DIGITS | "(" expr ")"

The words and/or/xor/not are aliases for &, |, ^, !.  Whitespace is
insignificant.  Translation uses the Boolean-ring identities: a&b is a*b,
a|b is a+b+a*b, !a is 1+a, and ^ is ring addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .anf import ZhegalkinPoly, _check_arity

__all__ = [
    "And",
    "Const",
    "Expr",
    "Not",
    "Or",
    "ParseError",
    "Var",
    "Xor",
    "expr_to_anf",
    "parse_expr",
]

# Nesting bound so pathological inputs fail cleanly; each level recurses
# through the whole precedence chain, so keep well under the interpreter's
# stack limit.
_MAX_DEPTH = 120


class ParseError(ValueError):
    """Syntax error carrying the offending 0-based source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    child: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Xor:
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Var, Not, And, Or, Xor]

_WORD_OPS = {"and": "&", "or": "|", "xor": "^", "not": "!"}


class _Token(NamedTuple):
    kind: str  # one of & | ^ ! ( ) const var end
    value: int  # constant bit or variable index; 0 otherwise
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        c = source[i]
        if c.isspace():
            i += 1
            continue
        if c in "&|^!()":
            tokens.append(_Token(c, 0, i))
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < n and source[i].isdigit():
                i += 1
            text = source[start:i]
            if text not in ("0", "1"):
                raise ParseError(f"constants are 0 and 1, got {text!r}", start)
            tokens.append(_Token("const", int(text), start))
            continue
        if c.isalpha():
            start = i
            while i < n and source[i].isalpha():
                i += 1
            word = source[start:i]
            if word in _WORD_OPS:
                tokens.append(_Token(_WORD_OPS[word], 0, start))
                continue
            if word == "x":
                digits_start = i
                while i < n and source[i].isdigit():
                    i += 1
                if i == digits_start:
                    raise ParseError("expected digits after 'x'", digits_start)
                index = int(source[digits_start:i])
                if index < 1:
                    raise ParseError("variable index must be at least 1", start)
                tokens.append(_Token("var", index, start))
                continue
            raise ParseError(f"unknown name {word!r}", start)
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", 0, n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _enter(self, pos: int):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError("expression nested too deeply", pos)

    def parse(self) -> Expr:
        expr = self.or_level()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError("unexpected trailing input", tok.pos)
        return expr

    def or_level(self) -> Expr:
        left = self.xor_level()
        while self.peek().kind == "|":
            self.advance()
            left = Or(left, self.xor_level())
        return left

    def xor_level(self) -> Expr:
        left = self.and_level()
        while self.peek().kind == "^":
            self.advance()
            left = Xor(left, self.and_level())
        return left

    def and_level(self) -> Expr:
        left = self.unary()
        while self.peek().kind == "&":
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "!":
            self.advance()
            self._enter(tok.pos)
            child = self.unary()
            self.depth -= 1
            return Not(child)
        return self.atom()

    def atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "const":
            return Const(tok.value)
        if tok.kind == "var":
            return Var(tok.value)
        if tok.kind == "(":
            self._enter(tok.pos)
            inner = self.or_level()
            self.depth -= 1
            closing = self.advance()
            if closing.kind != ")":
                raise ParseError("expected ')'", closing.pos)
            return inner
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected token {tok.kind!r}", tok.pos)


def parse_expr(source: str) -> Expr:
    """Parse an expression; raises ParseError with a position on bad input."""
    if not isinstance(source, str):
        raise ParseError("input must be text", 0)
    return _Parser(_tokenize(source)).parse()


def expr_to_anf(expr: Expr, arity: int) -> ZhegalkinPoly:
    """Translate an expression tree into its canonical polynomial."""
    _check_arity(arity)
    return _translate(expr, arity)


def _translate(expr: Expr, n: int) -> ZhegalkinPoly:
    if isinstance(expr, Const):
        return ZhegalkinPoly.constant(n, expr.value)
    if isinstance(expr, Var):
        if expr.index > n:
            raise ValueError(f"variable x{expr.index} exceeds arity {n}")
        return ZhegalkinPoly.variable(n, expr.index)
    if isinstance(expr, Not):
        return ZhegalkinPoly.one(n) + _translate(expr.child, n)
    if isinstance(expr, And):
        return _translate(expr.left, n) * _translate(expr.right, n)
    if isinstance(expr, Xor):
        return _translate(expr.left, n) + _translate(expr.right, n)
    if isinstance(expr, Or):
        a = _translate(expr.left, n)
        b = _translate(expr.right, n)
        return a + b + a * b
    raise TypeError(f"not an expression node: {expr!r}")

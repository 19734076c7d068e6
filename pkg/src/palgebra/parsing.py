"""Recursive-descent parser for scalar and element expressions.

Grammar (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' INT)*
    atom   := INT | NAME | '(' expr ')'

Scalar expressions know the names ``a`` and ``b``; element expressions add
``x`` and ``y`` and multiply noncommutatively in source order.  Extra names
may be supplied through an environment of let-bindings.  Exponents are
nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExprSyntaxError


@dataclass(frozen=True)
class Token:
    kind: str  # INT | NAME | OP | END
    text: str
    pos: int


_OPS = set("+-*/^()")


def tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(Token("OP", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token("END", "", n))
    return tokens


class _Parser:
    """Evaluating parser; atoms come from a name table, arithmetic from the
    value type's operators."""

    def __init__(self, text, atoms, from_int):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.atoms = atoms
        self.from_int = from_int

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.peek()
        if tok.kind != "OP" or tok.text != op:
            raise ExprSyntaxError(f"expected {op!r}", tok.pos)
        return self.advance()

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "*/":
                self.advance()
                rhs = self.factor()
                value = value * rhs if tok.text == "*" else value / rhs
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return -self.factor()
        value = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "^":
                self.advance()
                etok = self.peek()
                if etok.kind != "INT":
                    raise ExprSyntaxError("expected a nonnegative integer exponent", etok.pos)
                self.advance()
                value = value ** int(etok.text)
            else:
                return value

    def atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return self.from_int(int(tok.text))
        if tok.kind == "NAME":
            if tok.text not in self.atoms:
                raise ExprSyntaxError(f"unknown name {tok.text!r}", tok.pos)
            self.advance()
            return self.atoms[tok.text]
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        raise ExprSyntaxError("expected a value", tok.pos)


def parse_scalar(text, field, env=None):
    """Parse a scalar expression over the given field descriptor."""
    atoms = {"a": field.gen("a"), "b": field.gen("b")}
    if env:
        atoms.update(env)
    return _Parser(text, atoms, field.from_int).parse()


def parse_element(text, algebra, env=None):
    """Parse an element expression in the given symbol algebra.

    Let-bound names from ``env`` may be scalars or elements; scalars embed
    as multiples of the identity.
    """
    field = algebra.field
    atoms = {
        "a": algebra.scalar(field.gen("a")),
        "b": algebra.scalar(field.gen("b")),
        "x": algebra.x(),
        "y": algebra.y(),
    }
    if env:
        for name, value in env.items():
            atoms[name] = value if hasattr(value, "algebra") else algebra.scalar(value)
    return _Parser(text, atoms, lambda n: algebra.scalar(field.from_int(n))).parse()

"""Recursive-descent readers for polynomial expressions and functional sums.

Polynomial grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | factor
    factor := base ('^' uint)?
    base   := rational | 'i' | VAR | '(' expr ')'

Functional grammar: a signed sum of ``(coeff '*')? 'delta(' point ',' order ')'``.
Every error is an :class:`ExprSyntaxError` carrying the character offset.
"""

from __future__ import annotations

import re

from ..errors import ExprSyntaxError
from ..exact.gaussian import I, GaussianRational
from ..exact.poly import Poly
from ..functionals import Functional

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^(),]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.peek()[1] == value and self.peek()[0] != "end":
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        kind, val, pos = self.peek()
        if val != value or kind == "end":
            raise ExprSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", self.text, pos)
        self.i += 1

    def fail(self, what: str):
        _, val, pos = self.peek()
        raise ExprSyntaxError(f"expected {what}, found {val or 'end of input'!r}", self.text, pos)


class _PolyParser:
    def __init__(self, text: str, var: str):
        self.lex = _Lexer(text)
        self.var = var

    def parse(self) -> Poly:
        p = self.expr()
        if self.lex.peek()[0] != "end":
            self.lex.fail("an operator or end of input")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while True:
            if self.lex.accept("+"):
                p = p + self.term()
            elif self.lex.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Poly:
        p = self.unary()
        while self.lex.accept("*"):
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        if self.lex.accept("-"):
            return -self.unary()
        if self.lex.accept("+"):
            return self.unary()
        return self.factor()

    def factor(self) -> Poly:
        base = self.base()
        if self.lex.accept("^"):
            kind, val, _ = self.lex.peek()
            if kind != "num" or "/" in val:
                self.lex.fail("a nonnegative integer exponent")
            self.lex.next()
            return base ** int(val)
        return base

    def base(self) -> Poly:
        kind, val, pos = self.lex.peek()
        if kind == "num":
            self.lex.next()
            return Poly([GaussianRational.parse(val)])
        if kind == "name":
            self.lex.next()
            if val == self.var:
                return Poly([0, 1])
            if val == "i":
                return Poly([I])
            raise ExprSyntaxError(f"unknown name {val!r}", self.lex.text, pos)
        if self.lex.accept("("):
            p = self.expr()
            self.lex.expect(")")
            return p
        self.lex.fail("a number, a variable, or '('")


def parse_function(src: str, var: str = "z") -> Poly:
    """Parse a polynomial expression such as ``(1-z)*(1-1/2*z)``."""
    return _PolyParser(src, var).parse()


def _constant(p: Poly, text: str, pos: int) -> GaussianRational:
    if p.degree > 0:
        raise ExprSyntaxError("expected a constant", text, pos)
    return p[0]


def parse_functional(src: str) -> Functional:
    """Parse ``delta(1,0) + 2*delta(0,3) - (1/2+1*i)*delta(i,1)``."""
    parser = _PolyParser(src, var="\0")
    lex = parser.lex
    atoms = []
    sign = 1
    if lex.accept("-"):
        sign = -1
    else:
        lex.accept("+")
    while True:
        coeff = GaussianRational(1)
        kind, val, pos = lex.peek()
        if not (kind == "name" and val == "delta"):
            coeff = _constant(parser.factor(), src, pos)
            lex.expect("*")
            kind, val, pos = lex.peek()
        if not (kind == "name" and val == "delta"):
            lex.fail("'delta'")
        lex.next()
        lex.expect("(")
        ppos = lex.peek()[2]
        point = _constant(parser.expr(), src, ppos)
        lex.expect(",")
        kind, val, pos = lex.peek()
        if kind != "num" or "/" in val:
            lex.fail("a nonnegative integer derivative order")
        lex.next()
        lex.expect(")")
        atoms.append((point, int(val), coeff * sign))
        if lex.accept("+"):
            sign = 1
        elif lex.accept("-"):
            sign = -1
        elif lex.peek()[0] == "end":
            return Functional(atoms)
        else:
            lex.fail("'+', '-' or end of input")


def parse_roots(src: str):
    """Factored generator from ``"1, 2:3, 1/2+1*i"`` (root with optional multiplicity).

    An empty string or ``"none"`` gives the constant polynomial 1.
    """
    from ..exact.poly import FactoredPoly

    text = src.strip()
    if text in ("", "none", "const"):
        return FactoredPoly()
    factors = []
    offset = 0
    for part in src.split(","):
        root_text, _, mult_text = part.partition(":")
        lead = len(part) - len(part.lstrip())
        try:
            root = GaussianRational.parse(root_text)
        except ExprSyntaxError:
            raise ExprSyntaxError(f"malformed root {root_text.strip()!r}", src, offset + lead) from None
        mult = 1
        if mult_text:
            if not mult_text.strip().isdigit() or int(mult_text) < 1:
                raise ExprSyntaxError(f"malformed multiplicity {mult_text.strip()!r}", src, offset + len(root_text) + 1)
            mult = int(mult_text)
        factors.append((root, mult))
        offset += len(part) + 1
    return FactoredPoly(factors)

"""Recursive-descent parser for curve, focus and distance expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "i" | VAR | "sqrt" "(" expr ")" | "(" expr ")"

Constants evaluate to :class:`FieldElem`, anything mentioning the variable to
:class:`RatFn`.  Every rendered field element, polynomial and rational
function parses back to itself.
"""

from __future__ import annotations

import re

from ..errors import DivisionByZero, ExprSyntaxError, NonConstantWhereConstantRequired
from ..gfield import I, FieldElem, as_elem, try_sqrt
from ..ratfn import RatFn

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, text: str, var: str, allow_extend: bool):
        self.text = text
        self.var = var
        self.allow_extend = allow_extend
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos, self.text)

    def fail(self, msg):
        raise ExprSyntaxError(msg, self.peek()[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op, pos = self.take()[1:]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise DivisionByZero(f"division by zero at position {pos}")
                v = v / w
        return v

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            neg = False
            if self.peek()[:2] == ("op", "-"):
                self.take()
                neg = True
            kind, n, pos = self.take()
            if kind != "int":
                raise ExprSyntaxError("exponent must be an integer", pos, self.text)
            if neg and v.is_zero():
                raise DivisionByZero(f"zero to a negative power at position {pos}")
            v = v ** (-n if neg else n)
        return v

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return as_elem(val)
        if kind == "name":
            if val == "i":
                return I
            if val == self.var:
                return RatFn.x(self.var)
            if val == "sqrt":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                if isinstance(arg, RatFn):
                    raise NonConstantWhereConstantRequired(f"sqrt of a non-constant at position {pos}")
                return try_sqrt(arg, allow_extend=self.allow_extend)
            raise ExprSyntaxError(f"unknown name {val!r}", pos, self.text)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ExprSyntaxError("unexpected " + ("end of input" if kind == "end" else repr(val)), pos, self.text)


def parse_expr(text: str, var: str = "t", allow_extend: bool = True):
    """Parse ``text`` into a :class:`FieldElem` (constant) or a :class:`RatFn` in ``var``."""
    v = _Parser(text, var, allow_extend).parse()
    if isinstance(v, RatFn) and v.is_constant():
        return v.constant_value()
    return v


def parse_constant(text: str, allow_extend: bool = True) -> FieldElem:
    v = parse_expr(text, allow_extend=allow_extend)
    if not isinstance(v, FieldElem):
        raise NonConstantWhereConstantRequired(f"{text!r} is not a constant")
    return v


def parse_ratfn(text: str, var: str = "t", allow_extend: bool = True) -> RatFn:
    v = parse_expr(text, var=var, allow_extend=allow_extend)
    return v if isinstance(v, RatFn) else RatFn.const(v, var)

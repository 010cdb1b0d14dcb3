"""Tiny expression parser and term printer shared by all rings.

Grammar (usual precedence, ``^`` binds tightest, unary minus below it)::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary | unary)*     # juxtaposition multiplies
    unary := ("-" | "+") unary | power
    power := atom ("^" integer)?
    atom  := integer | name | "(" expr ")"
"""
from __future__ import annotations

import re

from .errors import InvalidParameter

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ring, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.names = names
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise InvalidParameter(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise InvalidParameter("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise InvalidParameter(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while True:
            t = self.peek()
            if t == ("op", "+"):
                self.take()
                v = v + self.term()
            elif t == ("op", "-"):
                self.take()
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                v = v * self.unary()
            elif t == ("op", "/"):
                self.take()
                v = v / self.unary()
            elif t[0] in ("num", "name") or t == ("op", "("):
                v = v * self.power()
            else:
                return v

    def unary(self):
        t = self.peek()
        if t == ("op", "-"):
            self.take()
            return -self.unary()
        if t == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        t = self.take()
        if t == ("op", "("):
            e = self.exponent()
            self.expect(")")
            return e
        if t == ("op", "-"):
            return -self.exponent()
        if t[0] != "num":
            raise InvalidParameter(f"bad exponent in {self.text!r}")
        return int(t[1])

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring(int(val))
        if kind == "name":
            if val not in self.names:
                raise InvalidParameter(f"unknown name {val!r}")
            return self.names[val]
        if val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise InvalidParameter(f"unexpected {val!r} in {self.text!r}")


def parse_expr(text: str, ring, names: dict):
    """Evaluate ``text`` inside ``ring`` with ``names`` bound to elements."""
    v = _Parser(text, ring, names).parse()
    return ring(v)


def _needs_paren(s: str) -> bool:
    return any(ch in s[1:] for ch in " +-*/^(")


def join_terms(items) -> str:
    """items: iterable of (coefficient string, monomial string), high to low."""
    parts = []
    for cstr, mono in items:
        if not mono:
            term = cstr
        elif cstr == "1":
            term = mono
        elif cstr == "-1":
            term = "-" + mono
        else:
            if _needs_paren(cstr):
                cstr = f"({cstr})"
            term = f"{cstr}*{mono}"
        if parts and term.startswith("-"):
            parts.append(" - " + term[1:])
        elif parts:
            parts.append(" + " + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


def monomial(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def format_univariate(coeffs, var: str) -> str:
    items = [
        (str(c), monomial(var, i))
        for i, c in reversed(list(enumerate(coeffs)))
        if c != 0
    ]
    return join_terms(items)

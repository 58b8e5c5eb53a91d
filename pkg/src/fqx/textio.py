"""Text syntax for fields, elements and polynomials.

Field designators: ``gf(p)``, ``gf(p^k)`` or ``gf(q)``.  Expressions are
built from integers, the variable ``X`` and the field generator ``t`` with
``+ - * / ^`` and parentheses; ``2X`` is read as ``2*X``.  Formatting emits
the canonical form, e.g. ``2*X^4 + (t+1)*X + 1``.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .gf import FieldDesc, field_from_order, make_field
from .polyring import Poly, t_divmod, t_gcd, t_monic, t_scale

_FIELD_RE = re.compile(r"^\s*(?:gf|GF|F_?)\s*\(?\s*(\d+)\s*(?:\^\s*(\d+))?\s*\)?\s*$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def parse_field(text: str) -> FieldDesc:
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"bad field designator {text!r}; expected gf(p) or gf(p^k)")
    base = int(m.group(1))
    if m.group(2) is not None:
        return make_field(base, int(m.group(2)))
    return field_from_order(base)


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif name is not None:
            toks.append(("name", name))
        elif sym is not None and not sym.isspace():
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}")
            toks.append(("sym", sym))
        pos = m.end()
    return toks


class _Parser:
    """Recursive descent over rational expressions; values are (num, den)."""

    def __init__(self, F: FieldDesc, text: str):
        self.F = F
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    # value helpers
    def const(self, v: int):
        return Poly._raw(self.F, (v,) if v else ()), Poly._raw(self.F, (1,))

    def add(self, a, b, sign=1):
        n1, d1 = a
        n2, d2 = b
        n2 = n2 if sign > 0 else -n2
        return _reduce(n1 * d2 + n2 * d1, d1 * d2)

    def mul(self, a, b):
        return _reduce(a[0] * b[0], a[1] * b[1])

    def div(self, a, b):
        if b[0].is_zero():
            raise ParseError(f"division by zero in {self.text!r}")
        return _reduce(a[0] * b[1], a[1] * b[0])

    def power(self, a, e: int):
        if e < 0:
            if a[0].is_zero():
                raise ParseError("zero to a negative power")
            a, e = (a[1], a[0]), -e
        return _reduce(a[0] ** e, a[1] ** e)

    # grammar
    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "sym" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = (-acc[0], acc[1])
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                acc = self.add(acc, self.term(), 1 if val == "+" else -1)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                acc = self.mul(acc, self.factor())
            elif kind == "sym" and val == "/":
                self.take()
                acc = self.div(acc, self.factor())
            elif kind in ("num", "name") or (kind == "sym" and val == "("):
                acc = self.mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            return self.power(base, sign * int(val))
        return base

    def atom(self):
        kind, val = self.take()
        F = self.F
        if kind == "num":
            return self.const(F.from_int(int(val)))
        if kind == "name":
            if val in ("X", "x"):
                return Poly._raw(F, (0, 1)), Poly._raw(F, (1,))
            if val == "t":
                if F.k == 1:
                    raise ParseError(f"generator t is not available in {F}")
                return self.const(F.generator_index)
            raise ParseError(f"unknown symbol {val!r}")
        if kind == "sym" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "sym" and val == "-":
            n, d = self.factor()
            return -n, d
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    F = num.field
    if num.is_zero():
        return num, Poly._raw(F, (1,))
    g = t_gcd(F, num.c, den.c)
    n = t_divmod(F, num.c, g)[0]
    d = t_divmod(F, den.c, g)[0]
    lc_inv = F.inv(d[-1])
    return Poly._raw(F, t_scale(F, n, lc_inv)), Poly._raw(F, t_monic(F, d))


def parse_ratfunc(F: FieldDesc, text: str) -> tuple[Poly, Poly]:
    """Parse a rational function; returns (num, den) with den monic."""
    return _Parser(F, text).parse()


def parse_poly(F: FieldDesc, text: str) -> Poly:
    num, den = parse_ratfunc(F, text)
    if den.deg > 0:
        raise ParseError(f"{text!r} is not a polynomial")
    return num


def parse_elem(F: FieldDesc, text: str):
    p = parse_poly(F, text)
    if p.deg > 0:
        raise ParseError(f"{text!r} is not a field element")
    return p.coeff(0)


def parse_form(F: FieldDesc, text: str) -> list[tuple[Poly, Poly]]:
    parts = [s for s in text.split(";")]
    if not parts or any(not s.strip() for s in parts):
        raise ParseError(f"bad form {text!r}; expected 'a1; a2; ...'")
    return [parse_ratfunc(F, s) for s in parts]


def format_elem_coeff(F: FieldDesc, v: int) -> str:
    s = F.fmt(v)
    if F.k > 1 and ("+" in s):
        return f"({s})"
    return s


def format_poly(f: Poly) -> str:
    F = f.field
    if not f.c:
        return "0"
    terms = []
    for i in range(len(f.c) - 1, -1, -1):
        v = f.c[i]
        if v == 0:
            continue
        if i == 0:
            terms.append(F.fmt(v))
            continue
        mono = "X" if i == 1 else f"X^{i}"
        if v == 1:
            terms.append(mono)
        else:
            terms.append(f"{format_elem_coeff(F, v)}*{mono}")
    return " + ".join(terms)


def format_ratfunc(num: Poly, den: Poly) -> str:
    if den.deg <= 0 and den.c == (1,):
        return format_poly(num)
    return f"({format_poly(num)})/({format_poly(den)})"

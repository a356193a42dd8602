"""Recursive-descent parser for ring elements and operator expressions.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("+" | "-") unary | power
    power    := atom ("^" exponent)?
    exponent := ["+" | "-"] INT | "(" ["+" | "-"] INT ")"
    atom     := INT | SYMBOL | "(" expr ")" | matrix
    matrix   := "[" row ("," row)* "]"
    row      := "[" expr ("," expr)* "]"
    SYMBOL   := "x" | "z" | "d" | "n" | "S"

Division is only allowed by a rational constant.  Which symbols are legal
depends on the context: ``x`` in ring elements, ``x`` and ``z`` in
polynomials in ``z``, ``z`` and ``d`` (the derivative in ``z``) in
differential operators, ``n`` and ``S`` (the index shift) in difference
operators.  Products are taken in the operator algebra, so ``d*z`` means
``z*d + 1`` and ``S*n`` means ``(n+1)*S``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .deltaop import DeltaOp, NPoly
from .diffop import DiffOp
from .errors import DescriptorMismatch, NonConstantCoefficient, ParseError
from .orthogonality import WeightSpec
from .ring import POLYX, Poly, Ring, RingElem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def tokenize(text: str):
    out = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("sym", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def expect(self, ch):
        t = self.take()
        if t[0] != "op" or t[1] != ch:
            raise self.error(f"expected {ch!r}", t)
        return t

    def at(self, ch):
        t = self.peek()
        return t[0] == "op" and t[1] == ch

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error("unexpected trailing input")
        return node

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()
            node = ("add" if op[1] == "+" else "sub", op[2], node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()
            node = ("mul" if op[1] == "*" else "div", op[2], node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            op = self.take()
            return ("neg", op[2], self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            op = self.take()
            node = ("pow", op[2], node, self.exponent())
        return node

    def exponent(self):
        paren = self.at("(")
        if paren:
            self.take()
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.take()[1] == "-" else 1
        t = self.take()
        if t[0] != "int":
            raise self.error("exponent must be an integer", t)
        if paren:
            self.expect(")")
        return sign * t[1]

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return ("num", t[2], Fraction(t[1]))
        if t[0] == "sym":
            if t[1] not in ("x", "z", "d", "n", "S"):
                raise self.error(f"unknown symbol {t[1]!r}", t)
            return ("sym", t[2], t[1])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect(")")
            return node
        if t[0] == "op" and t[1] == "[":
            rows = []
            while True:
                self.expect("[")
                row = [self.expr()]
                while self.at(","):
                    self.take()
                    row.append(self.expr())
                self.expect("]")
                rows.append(row)
                if not self.at(","):
                    break
                self.take()
            self.expect("]")
            return ("mat", t[2], rows)
        raise self.error("expected a number, symbol, matrix or '('", t)


def parse_ast(text: str):
    return _Parser(text).parse()


class _LaurentPoly:
    """Finite Laurent polynomial in ``z`` with (possibly non-constant) ring coefficients."""

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return _LaurentPoly(self.ring, out)

    def __neg__(self):
        return _LaurentPoly(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Fraction):
            return _LaurentPoly(self.ring, {k: v * other for k, v in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return _LaurentPoly(self.ring, out)

    def coefficient_list(self) -> list[RingElem]:
        if not self.terms:
            return [self.ring.zero()]
        if min(self.terms) < 0:
            raise ValueError("negative powers of z are not allowed here")
        return [self.terms.get(k, self.ring.zero()) for k in range(max(self.terms) + 1)]


def _rational_value(node, text):
    """Evaluate a node that must be a rational constant."""
    kind, pos = node[0], node[1]
    if kind == "num":
        return node[2]
    if kind == "neg":
        return -_rational_value(node[2], text)
    if kind in ("add", "sub", "mul", "div"):
        a, b = _rational_value(node[2], text), _rational_value(node[3], text)
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        if b == 0:
            raise ParseError("division by zero", text, pos)
        return a / b
    if kind == "pow":
        base = _rational_value(node[2], text)
        if base == 0 and node[3] < 0:
            raise ParseError("division by zero", text, pos)
        return base ** node[3]
    raise ParseError("division is only allowed by a rational number", text, pos)


class _Evaluator:
    """Fold an AST into one algebra.

    ``context`` is ``ring``, ``zpoly``, ``diffop`` or ``deltaop``.
    """

    SYMBOLS = {"ring": "x", "zpoly": "xz", "diffop": "zd", "deltaop": "nS"}

    def __init__(self, ring: Ring, context: str, text: str):
        self.ring = ring
        self.context = context
        self.text = text

    def lift(self, c: RingElem):
        if self.context == "ring":
            return c
        if self.context == "zpoly":
            return _LaurentPoly(self.ring, {0: c})
        if not c.is_constant():
            raise NonConstantCoefficient(f"coefficient {c} is not constant")
        if self.context == "diffop":
            return DiffOp(self.ring, {(0, 0): c})
        return DeltaOp(self.ring, {0: NPoly(self.ring, [c])})

    def symbol(self, name, exp, pos):
        if name not in self.SYMBOLS[self.context]:
            if name == "x" and self.context in ("diffop", "deltaop"):
                raise NonConstantCoefficient("operator coefficients must be constant; x is not allowed")
            raise ParseError(f"symbol {name!r} is not allowed in a {self.context} expression", self.text, pos)
        if exp < 0 and name not in ("z", "S"):
            raise ParseError(f"negative power of {name!r}", self.text, pos)
        if name == "x":
            if self.ring.kind == "rational":
                raise ParseError("the rational ring has no symbol x", self.text, pos)
            return self.lift(self.ring.poly(Poly.x() ** exp))
        if name == "z":
            if self.context == "zpoly":
                return _LaurentPoly(self.ring, {exp: self.ring.one()})
            return DiffOp(self.ring, {(exp, 0): self.ring.one()})
        if name == "d":
            return DiffOp(self.ring, {(0, exp): self.ring.one()})
        if name == "n":
            return DeltaOp(self.ring, {0: NPoly(self.ring, [0] * exp + [1])})
        return DeltaOp(self.ring, {exp: NPoly(self.ring, [1])})

    def eval(self, node):
        kind, pos = node[0], node[1]
        if kind == "num":
            return self.lift(self.ring.scalar(node[2]))
        if kind == "sym":
            return self.symbol(node[2], 1, pos)
        if kind == "mat":
            if self.context == "zpoly":
                return self.zmatrix(node)
            return self.lift(self.matrix(node))
        if kind == "neg":
            return -self.eval(node[2])
        if kind == "add":
            return self.eval(node[2]) + self.eval(node[3])
        if kind == "sub":
            return self.eval(node[2]) - self.eval(node[3])
        if kind == "mul":
            return self.eval(node[2]) * self.eval(node[3])
        if kind == "div":
            c = _rational_value(node[3], self.text)
            if c == 0:
                raise ParseError("division by zero", self.text, pos)
            return self.eval(node[2]) * (Fraction(1) / c)
        if kind == "pow":
            base, k = node[2], node[3]
            if base[0] == "sym":
                return self.symbol(base[2], k, base[1])
            if k < 0:
                try:
                    c = _rational_value(base, self.text)
                except ParseError:
                    raise ParseError("negative powers are only allowed on z, S and numbers", self.text, pos)
                if c == 0:
                    raise ParseError("division by zero", self.text, pos)
                return self.lift(self.ring.scalar(c ** k))
            value = self.eval(base)
            out = self.lift(self.ring.one())
            for _ in range(k):
                out = out * value
            return out
        raise ParseError(f"unsupported node {kind}", self.text, pos)

    def matrix(self, node):
        if self.ring.kind != "matrix":
            raise ParseError(f"matrix literal in a {self.ring} expression", self.text, node[1])
        rows = node[2]
        entries = []
        sub = _Evaluator(POLYX, "ring", self.text)
        for row in rows:
            entries.append([sub.eval(e).value for e in row])
        try:
            return self.ring.matrix(entries)
        except DescriptorMismatch as exc:
            raise ParseError(str(exc), self.text, node[1]) from None

    def zmatrix(self, node):
        """Matrix literal whose entries are polynomials in z, split by power of z."""
        if self.ring.kind != "matrix":
            raise ParseError(f"matrix literal in a {self.ring} expression", self.text, node[1])
        sub = _Evaluator(POLYX, "zpoly", self.text)
        entries = [[sub.eval(e) for e in row] for row in node[2]]
        powers = sorted({k for row in entries for e in row for k in e.terms})
        out = {}
        for k in powers:
            rows = [[e.terms[k].value if k in e.terms else Poly() for e in row] for row in entries]
            try:
                out[k] = self.ring.matrix(rows)
            except DescriptorMismatch as exc:
                raise ParseError(str(exc), self.text, node[1]) from None
        if not powers:
            self.matrix(node)
        return _LaurentPoly(self.ring, out)


def _evaluate(text: str, ring: Ring, context: str):
    if text is None or not text.strip():
        raise ParseError("empty expression", text or "", 0)
    ast = parse_ast(text)
    return _Evaluator(ring, context, text).eval(ast)


def parse_ring_elem(text: str, ring: Ring) -> RingElem:
    return _evaluate(text, ring, "ring")


def parse_zpoly(text: str, ring: Ring) -> list[RingElem]:
    """Polynomial in ``z`` as an ascending coefficient list."""
    value = _evaluate(text, ring, "zpoly")
    try:
        return value.coefficient_list()
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_diffop(text: str, ring: Ring) -> DiffOp:
    """Parse e.g. ``d^2 - 2*z^-1*d^1`` into a normal-ordered operator."""
    return _evaluate(text, ring, "diffop")


def parse_deltaop(text: str, ring: Ring) -> DeltaOp:
    """Parse e.g. ``(n^2+n-2)*S^2`` into a difference operator."""
    return _evaluate(text, ring, "deltaop")


def parse_poly(text: str) -> Poly:
    return parse_ring_elem(text, POLYX).value


def parse_weight(text: str) -> WeightSpec:
    """Read ``num=<poly>;den=<poly>``; either part may be omitted."""
    parts = {"num": "1", "den": "1"}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or key not in parts:
            raise ParseError("weight must look like 'num=<poly>;den=<poly>'", text, text.find(chunk))
        parts[key] = value
    return WeightSpec(parse_poly(parts["num"]), parse_poly(parts["den"]))

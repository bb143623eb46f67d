"""Recursive-descent parser for polynomial and quasi-polynomial literals.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    exponent:= INT ('^' exponent)?          (right associative)
    atom    := INT | 'x' | '(' expr ')' | quasi
    quasi   := '{' INT (';' expr)+ '}'      (no nesting)

The pieces of a quasi literal are written in the class variable, also
spelled ``x``: ``{2; x; 2*x+1}`` is n at every integer n.
"""

import re
from dataclasses import dataclass

from .quasipoly import QuasiPolynomial


class ExprSyntaxError(ValueError):
    def __init__(self, message, text, pos, expected=()):
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {self.line}, column {self.column}: {message}{detail}")


class NestedQuasiLiteral(ExprSyntaxError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Quasi:
    period: int
    pieces: tuple


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*^(){};]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ExprSyntaxError(f"unexpected character {text[bad]!r}", text, bad,
                                  ("integer", "x", "operator"))
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("INT", m.group(1), start))
        elif m.group(2):
            tokens.append(("x", "x", start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.in_quasi = False

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, *kinds):
        kind, value, pos = self.tokens[self.i]
        if kind not in kinds:
            shown = "end of input" if kind == "EOF" else repr(value)
            raise ExprSyntaxError(f"unexpected {shown}", self.text, pos, kinds)
        self.i += 1
        return value

    def parse(self):
        node = self.expr()
        self.take("EOF")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take("+", "-")
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() == "*":
            self.take("*")
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek() == "-":
            self.take("-")
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            return Pow(base, self.exponent())
        return base

    def exponent(self):
        e = int(self.take("INT"))
        if self.peek() == "^":
            self.take("^")
            e = e ** self.exponent()
        return e

    def atom(self):
        kind = self.peek()
        if kind == "INT":
            return Num(int(self.take("INT")))
        if kind == "x":
            self.take("x")
            return Var()
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "{":
            return self.quasi()
        self.take("INT", "x", "(", "{")

    def quasi(self):
        pos = self.tokens[self.i][2]
        if self.in_quasi:
            raise NestedQuasiLiteral("quasi-polynomial literals cannot be nested", self.text, pos)
        self.take("{")
        period = int(self.take("INT"))
        if period < 1:
            raise ExprSyntaxError("period must be positive", self.text, pos)
        self.in_quasi = True
        pieces = []
        while self.peek() == ";":
            self.take(";")
            pieces.append(self.expr())
        self.in_quasi = False
        end = self.tokens[self.i][2]
        self.take("}", ";")
        if len(pieces) != period:
            raise ExprSyntaxError(f"period {period} needs {period} pieces, got {len(pieces)}",
                                  self.text, end)
        return Quasi(period, tuple(pieces))


def parse_ast(text):
    return _Parser(text).parse()


def lower(node):
    """Evaluate an AST in R."""
    if isinstance(node, Num):
        return QuasiPolynomial.constant(node.value)
    if isinstance(node, Var):
        return QuasiPolynomial.x()
    if isinstance(node, Neg):
        return -lower(node.arg)
    if isinstance(node, Pow):
        return lower(node.base) ** node.exponent
    if isinstance(node, BinOp):
        a, b = lower(node.left), lower(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    if isinstance(node, Quasi):
        return QuasiPolynomial(node.period, [lower(p).as_polynomial() for p in node.pieces]).canonical()
    raise TypeError(f"unknown node {node!r}")


def parse_expr(text):
    return lower(parse_ast(text))


def parse_poly(text):
    """Parse text that must denote an element of Z[x]."""
    q = parse_expr(text)
    if not q.is_polynomial():
        raise ValueError(f"{text!r} is not a polynomial")
    return q.as_polynomial()


def parse_matrix(text):
    """Matrix from JSON (array of arrays of strings) or comma-separated rows."""
    import json

    stripped = text.strip()
    if stripped.startswith("["):
        rows = json.loads(stripped)
        return [[parse_expr(str(e)) for e in row] for row in rows]
    rows = []
    for line in stripped.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([parse_expr(e) for e in _split_top(line)])
    return rows


def _split_top(line):
    """Split on commas that are not inside braces or parentheses."""
    out, depth, cur = [], 0, ""
    for ch in line:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [s.strip() for s in out]

"""Abstract syntax, parser and printer for string-diagram expressions.

Grammar::

    expr   := tensor { "." tensor }
    tensor := atom { "*" atom }
    atom   := NAME [ "[" NAME { "," NAME } "]" ] | "(" expr ")"

``f . g`` means "apply g first".  A chain ``a . b . c`` nests to the right,
``a * b * c`` nests to the left.  ``#`` starts a comment running to the end
of the line.
"""
from __future__ import annotations

from dataclasses import dataclass


class DiagramSyntaxError(SyntaxError):
    def __init__(self, msg, line, column, text=None):
        super().__init__(msg)
        self.msg = msg
        self.line = line
        self.column = column
        self.lineno = line
        self.offset = column
        self.text = text

    def __str__(self):
        return f"{self.msg} at line {self.line}, column {self.column}"


@dataclass(frozen=True)
class Generator:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Identity:
    space: str | None = None


@dataclass(frozen=True)
class Compose:
    upper: object
    lower: object


@dataclass(frozen=True)
class TensorProduct:
    left: object
    right: object


Node = Generator | Identity | Compose | TensorProduct


def _tokenize(src: str):
    out = []
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch.isascii() and (ch.isalpha() or ch == "_"):
            j = i
            while j < n and src[j].isascii() and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(("NAME", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "[](),.*":
            out.append((ch, ch, line, col))
            i, col = i + 1, col + 1
            continue
        raise DiagramSyntaxError(f"unexpected character {ch!r}", line, col, src)
    out.append(("EOF", "", line, col))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise DiagramSyntaxError(f"expected {kind!r}, found {what}", tok[2], tok[3], self.src)
        self.i += 1
        return tok

    def expr(self):
        parts = [self.tensor()]
        while self.peek()[0] == ".":
            self.i += 1
            parts.append(self.tensor())
        node = parts[-1]
        for p in reversed(parts[:-1]):
            node = Compose(p, node)
        return node

    def tensor(self):
        node = self.atom()
        while self.peek()[0] == "*":
            self.i += 1
            node = TensorProduct(node, self.atom())
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        if tok[0] != "NAME":
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise DiagramSyntaxError(f"expected a generator or '(', found {what}",
                                     tok[2], tok[3], self.src)
        self.i += 1
        name = tok[1]
        args = []
        if self.peek()[0] == "[":
            self.i += 1
            args.append(self.take("NAME")[1])
            while self.peek()[0] == ",":
                self.i += 1
                args.append(self.take("NAME")[1])
            self.take("]")
        if name == "id":
            if not args:
                return Identity(None)
            node = Identity(args[0])
            for a in args[1:]:
                node = TensorProduct(node, Identity(a))
            return node
        return Generator(name, tuple(args))


def parse(src: str) -> Node:
    """Parse an expression; raises DiagramSyntaxError with line/column."""
    p = _Parser(src)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "EOF":
        raise DiagramSyntaxError(f"unexpected {tok[1]!r}", tok[2], tok[3], src)
    return node


def to_source(node: Node) -> str:
    """Print an expression so that parse(to_source(e)) == e."""
    if isinstance(node, Generator):
        return node.name + (f"[{','.join(node.args)}]" if node.args else "")
    if isinstance(node, Identity):
        return "id" if node.space is None else f"id[{node.space}]"
    if isinstance(node, Compose):
        up = to_source(node.upper)
        if isinstance(node.upper, Compose):
            up = f"({up})"
        return f"{up} . {to_source(node.lower)}"
    if isinstance(node, TensorProduct):
        left, right = to_source(node.left), to_source(node.right)
        if isinstance(node.left, Compose):
            left = f"({left})"
        if isinstance(node.right, (Compose, TensorProduct)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not an expression node: {node!r}")

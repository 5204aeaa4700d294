"""Recursive-descent parser for class expressions such as ``tau * wc_{1,1} + w_3``.

Grammar (``*`` binds tighter than ``+``)::

    expr   := term ("+" term)*
    term   := power ("*" power)*
    power  := atom ("^" INT)?
    atom   := "(" expr ")" | "rho" | "tau" | INT
            | "w_" IDX ("^(" INT ")")? | "c_" IDX | "wc_{" INT "," INT "}"
    IDX    := INT | "{" INT "}"

``x^n`` raises any atom to a power; ``w_i^(e)`` is the generalized class.
Errors carry the byte offset of the offending input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import InvariantElement, class_c, class_w, class_w_e, class_wc, one
from .m2 import RHO, TAU


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        self.message = message
        self.offset = offset
        super().__init__(f"syntax error at offset {offset}: {message}")


class EvalError(ValueError):
    def __init__(self, message: str, offset: int):
        self.message = message
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")


# -- tree ------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Scalar:
    name: str  # "rho" or "tau"
    pos: int = 0

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class ClassRef:
    kind: str  # "w", "c", "wc"
    args: tuple[int, ...]
    pos: int = 0

    def render(self) -> str:
        if self.kind == "wc":
            return f"wc_{{{self.args[0]},{self.args[1]}}}"
        if self.kind == "w" and len(self.args) == 2:
            return f"w_{self.args[0]}^({self.args[1]})"
        return f"{self.kind}_{self.args[0]}"


@dataclass(frozen=True)
class Sum:
    terms: tuple
    pos: int = 0

    def render(self) -> str:
        return " + ".join(t.render() for t in self.terms)


@dataclass(frozen=True)
class Product:
    factors: tuple
    pos: int = 0

    def render(self) -> str:
        return " * ".join(f"({f.render()})" if isinstance(f, Sum) else f.render()
                          for f in self.factors)


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    pos: int = 0

    def render(self) -> str:
        inner = self.base.render()
        if not isinstance(self.base, (Num, Scalar)) and not (
                isinstance(self.base, ClassRef) and len(self.base.args) == 1):
            inner = f"({inner})"
        return f"{inner}^{self.exponent}"


Node = Num | Scalar | ClassRef | Sum | Product | Power


# -- parsing -----------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    def offset(self, i: int | None = None) -> int:
        return len(self.src[: self.i if i is None else i].encode("utf-8"))

    def fail(self, message: str, i: int | None = None):
        raise ParseError(message, self.offset(i))

    def ws(self) -> None:
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.src.startswith(s, self.i)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.i += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.eat(s):
            self.fail(f"expected {s!r}" + self._found())

    def _found(self) -> str:
        if self.i >= len(self.src):
            return ", found end of input"
        return f", found {self.src[self.i]!r}"

    def integer(self) -> int:
        self.ws()
        start = self.i
        while self.i < len(self.src) and self.src[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected an integer" + self._found())
        return int(self.src[start:self.i])

    def parse(self) -> Node:
        node = self.expr()
        self.ws()
        if self.i < len(self.src):
            self.fail(f"unexpected {self.src[self.i]!r}")
        return node

    def expr(self) -> Node:
        self.ws()
        pos = self.offset()
        terms = [self.term()]
        while self.eat("+"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms), pos)

    def term(self) -> Node:
        self.ws()
        pos = self.offset()
        factors = [self.power()]
        while self.eat("*"):
            factors.append(self.power())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), pos)

    def power(self) -> Node:
        self.ws()
        pos = self.offset()
        base = self.atom()
        if self.eat("^"):
            return Power(base, self.integer(), pos)
        return base

    def index(self) -> int:
        if self.eat("{"):
            n = self.integer()
            self.expect("}")
            return n
        return self.integer()

    def atom(self) -> Node:
        self.ws()
        pos = self.offset()
        if self.eat("("):
            node = self.expr()
            self.expect(")")
            return node
        for name in ("rho", "tau"):
            if self.eat(name):
                return Scalar(name, pos)
        if self.eat("wc_"):
            self.expect("{")
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect("}")
            return ClassRef("wc", (i, j), pos)
        if self.eat("w_"):
            i = self.index()
            if self.src.startswith("^(", self.i):
                self.i += 2
                e = self.integer()
                self.expect(")")
                return ClassRef("w", (i, e), pos)
            return ClassRef("w", (i,), pos)
        if self.eat("c_"):
            return ClassRef("c", (self.index(),), pos)
        if self.i < len(self.src) and self.src[self.i].isdigit():
            return Num(self.integer(), pos)
        self.fail("expected a class, rho, tau, an integer or '('" + self._found())


def parse_expression(src: str) -> Node:
    return _Parser(src).parse()


# -- evaluation ---------------------------------------------------------------------

def evaluate(node: Node, k: int) -> InvariantElement:
    """Value of an expression tree in Inv_k."""
    if isinstance(node, Num):
        return InvariantElement.scalar(node.value & 1, k)
    if isinstance(node, Scalar):
        return InvariantElement.scalar(RHO if node.name == "rho" else TAU, k)
    if isinstance(node, ClassRef):
        try:
            if node.kind == "wc":
                return class_wc(*node.args, k)
            if node.kind == "c":
                return class_c(node.args[0], k)
            if len(node.args) == 1:
                return class_w(node.args[0], k)
            return class_w_e(*node.args, k)
        except ValueError as exc:
            raise EvalError(str(exc), node.pos) from None
    if isinstance(node, Sum):
        acc = InvariantElement(k)
        for t in node.terms:
            acc = acc + evaluate(t, k)
        return acc
    if isinstance(node, Product):
        acc = one(k)
        for f in node.factors:
            acc = acc * evaluate(f, k)
        return acc
    if isinstance(node, Power):
        return evaluate(node.base, k) ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(src: str, k: int) -> InvariantElement:
    return evaluate(parse_expression(src), k)

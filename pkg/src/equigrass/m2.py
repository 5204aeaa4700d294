"""The bigraded coefficient ring M2 = H^{*,*}(pt; Z/2).

The positive cone is Z/2[tau, rho] with tau in bidegree (0,1) and rho in
(1,1).  The negative cone is spanned by the classes theta/(tau^k rho^l) in
bidegree (-l, -2-k-l), with theta^2 = 0.  Coefficients are in F2, so an
element is simply a finite set of monomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class M2Monomial:
    """Either ``tau^a rho^b`` (``neg=False``) or ``theta/(tau^a rho^b)``."""

    neg: bool
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"negative exponent in {self.a, self.b}")

    @property
    def bidegree(self) -> tuple[int, int]:
        if self.neg:
            return (-self.b, -2 - self.a - self.b)
        return (self.b, self.a + self.b)

    def __mul__(self, other: "M2Monomial") -> "M2Monomial | None":
        if self.neg and other.neg:
            return None
        if not self.neg and not other.neg:
            return M2Monomial(False, self.a + other.a, self.b + other.b)
        pos, neg = (self, other) if other.neg else (other, self)
        # tau^a rho^b * theta/(tau^k rho^l) only survives when it divides
        if pos.a <= neg.a and pos.b <= neg.b:
            return M2Monomial(True, neg.a - pos.a, neg.b - pos.b)
        return None

    def render(self) -> str:
        if self.neg:
            inner = _render_powers(self.a, self.b)
            return "Q" if inner == "1" else f"Q/({inner})"
        return _render_powers(self.a, self.b)


def Pos(a: int = 0, b: int = 0) -> M2Monomial:
    return M2Monomial(False, a, b)


def Neg(k: int = 0, l: int = 0) -> M2Monomial:
    return M2Monomial(True, k, l)


def _render_powers(a: int, b: int) -> str:
    parts = []
    for name, e in (("t", a), ("r", b)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def in_support(p: int, q: int) -> bool:
    """True when M2 is nonzero in bidegree (p, q)."""
    return (q >= 0 and 0 <= p <= q) or (p <= 0 and q <= p - 2)


def monomial_at(p: int, q: int) -> M2Monomial | None:
    """The unique monomial spanning M2^{p,q}, or None."""
    if q >= 0 and 0 <= p <= q:
        return Pos(q - p, p)
    if p <= 0 and q <= p - 2:
        return Neg(p - 2 - q, -p)
    return None


class M2Element:
    """An F2-linear combination of M2 monomials, stored as a frozenset."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[M2Monomial] = ()):
        acc: set[M2Monomial] = set()
        for t in terms:
            acc ^= {t}
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def one(cls) -> "M2Element":
        return cls([Pos()])

    @classmethod
    def zero(cls) -> "M2Element":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _from_int(other)
        return isinstance(other, M2Element) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __iter__(self) -> Iterator[M2Monomial]:
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "M2Element") -> "M2Element":
        if isinstance(other, int):
            other = _from_int(other)
        out = M2Element.__new__(M2Element)
        out.terms = self.terms ^ other.terms
        out._hash = None
        return out

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "M2Element") -> "M2Element":
        if isinstance(other, int):
            other = _from_int(other)
        if not isinstance(other, M2Element):
            return NotImplemented
        acc: set[M2Monomial] = set()
        for x in self.terms:
            for y in other.terms:
                z = x * y
                if z is not None:
                    acc ^= {z}
        out = M2Element.__new__(M2Element)
        out.terms = frozenset(acc)
        out._hash = None
        return out

    __rmul__ = __mul__

    def is_homogeneous(self) -> bool:
        return len({t.bidegree for t in self.terms}) <= 1

    @property
    def bidegree(self) -> tuple[int, int] | None:
        degs = {t.bidegree for t in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(degs)) if degs else None

    def is_positive(self) -> bool:
        return all(not t.neg for t in self.terms)

    def constant_term(self) -> int:
        """Coefficient of 1; this is the reduction modulo (rho, tau) and theta."""
        return int(Pos() in self.terms)

    def forget(self) -> int:
        """Image under tau -> 1, rho -> 0 (negative cone -> 0)."""
        return sum(1 for t in self.terms if not t.neg and t.b == 0) & 1

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(t.render() for t in sorted(self.terms))

    def __repr__(self) -> str:
        return f"M2Element({self.render()})"

    __str__ = render


def _from_int(n: int) -> M2Element:
    return M2Element.one() if n & 1 else M2Element()


ONE = M2Element.one()
ZERO = M2Element.zero()
TAU = M2Element([Pos(1, 0)])
RHO = M2Element([Pos(0, 1)])
THETA = M2Element([Neg(0, 0)])


def m2_mul(x: M2Element, y: M2Element) -> M2Element:
    return x * y


def m2_forget(x: M2Element) -> int:
    """tau -> 1, rho -> 0; linear, so mixed bidegrees are accepted too."""
    return x.forget()


def rho_tau(s: int, t: int) -> M2Element:
    """The monomial rho^s tau^t."""
    return M2Element([Pos(t, s)])


_POW = r"(?:\^(\d+))?"


def _parse_powers(src: str) -> tuple[int, int]:
    src = src.strip()
    if src == "1":
        return 0, 0
    m = re.fullmatch(rf"(t{_POW})?\s*(r{_POW})?", src)
    if not m or not src:
        raise ValueError(f"cannot parse M2 monomial {src!r}")
    a = (int(m.group(2)) if m.group(2) else 1) if m.group(1) else 0
    b = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
    return a, b


def parse_m2(src: str) -> M2Element:
    """Inverse of ``M2Element.render``."""
    src = src.strip()
    if src == "0":
        return M2Element()
    terms = []
    for piece in src.split("+"):
        piece = piece.strip()
        if piece.startswith("Q"):
            rest = piece[1:].strip()
            if not rest:
                terms.append(Neg(0, 0))
                continue
            m = re.fullmatch(r"/\((.*)\)", rest)
            if not m:
                raise ValueError(f"cannot parse M2 monomial {piece!r}")
            terms.append(Neg(*_parse_powers(m.group(1))))
        else:
            terms.append(Pos(*_parse_powers(piece)))
    return M2Element(terms)

"""The deRham invariants L_n = (Lambda(a_1..a_n) (x) F2[b_1..b_n])^{S_n}.

Orbit sums are indexed by partitions exactly as in ``invariants``: index
i has pure degree 2r for b_i^r and 2r+1 for a_i b_i^r.  The ring is
graded by deg a_i = 1, deg b_i = 2, so the degree of [m] is the sum of
its partition; the weight (number of a's and b's) gives a second grading
that matches the bidegree in Inv_n.  Products never leave the basis
because a_i^2 = 0 simply drops a term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Union

from . import _kernels
from .gf2 import EchelonBasis
from .report import Report
from .partitions import (Partition, _at_most, enumerate_partitions, make_partition,
                         orbit_size, weight)

Grade = Union[int, tuple[int, int]]


class LnElement:
    """F2-combination of orbit sums [m] in L_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[Partition] = ()):
        self.n = n
        acc: set = set()
        for t in terms:
            t = tuple(t)
            if len(t) != n:
                raise ValueError(f"{t} does not have {n} parts")
            acc ^= {t}
        self.terms = frozenset(acc)

    @classmethod
    def basis(cls, p: Partition) -> "LnElement":
        return cls(len(p), [tuple(sorted(p))])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LnElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __add__(self, other: "LnElement") -> "LnElement":
        _check_n(self, other)
        out = LnElement(self.n)
        out.terms = self.terms ^ other.terms
        return out

    __sub__ = __add__

    def __mul__(self, other: "LnElement") -> "LnElement":
        return ln_mul(self, other)

    def degrees(self) -> set[int]:
        return {sum(t) for t in self.terms}

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join("[" + ",".join(map(str, t)) + "]" for t in sorted(self.terms))

    __str__ = render

    def __repr__(self) -> str:
        return f"LnElement(n={self.n}, {self.render()})"


def _check_n(x: LnElement, y: LnElement) -> None:
    if x.n != y.n:
        raise ValueError(f"mixing L_{x.n} and L_{y.n}")


@lru_cache(maxsize=200_000)
def basis_product(lam: Partition, mu: Partition) -> frozenset:
    """[lam] * [mu] in L_n as a set of partitions."""
    counts = _kernels.orbit_product_counts(lam, mu, True)
    n_lam = orbit_size(lam)
    out = set()
    for nu, c in counts.items():
        total = c * n_lam
        n_nu = orbit_size(nu)
        assert total % n_nu == 0
        if (total // n_nu) & 1:
            out.add(nu)
    return frozenset(out)


def ln_mul(x: LnElement, y: LnElement) -> LnElement:
    _check_n(x, y)
    acc: set = set()
    for lam in x.terms:
        for mu in y.terms:
            key = (lam, mu) if lam <= mu else (mu, lam)
            acc ^= basis_product(*key)
    out = LnElement(x.n)
    out.terms = frozenset(acc)
    return out


def ln_one(n: int) -> LnElement:
    return LnElement(n, [(0,) * n])


# -- named classes -------------------------------------------------------------

def alpha_ie(i: int, e: int, n: int) -> LnElement:
    """alpha_{i,e} = [a_1..a_{2^i} b_1^e..b_{2^i}^e]."""
    if i < 0 or e < 0 or 2 ** i > n:
        raise ValueError(f"alpha_({i},{e}) needs 2^i <= n = {n}")
    return LnElement.basis(make_partition([2 * e + 1] * 2 ** i, n))


def sigma_a(r: int, n: int) -> LnElement:
    """Elementary symmetric function in the a's."""
    if not 0 <= r <= n:
        raise ValueError(f"sigma_{r}(a) needs 0 <= r <= {n}")
    return LnElement.basis(make_partition([1] * r, n))


def sigma_b(r: int, n: int) -> LnElement:
    if not 0 <= r <= n:
        raise ValueError(f"sigma_{r}(b) needs 0 <= r <= {n}")
    return LnElement.basis(make_partition([2] * r, n))


@dataclass(frozen=True)
class Generator:
    name: str
    partition: Partition

    @property
    def degree(self) -> int:
        return sum(self.partition)

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.partition), weight(self.partition)


def indecomposable_basis_Ln(n: int) -> list[Generator]:
    """sigma_i(b) for 1 <= i <= n and alpha_{i,e} for 2^i <= n, e <= n/2^i - 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = [Generator(f"sigma_{i}(b)", make_partition([2] * i, n)) for i in range(1, n + 1)]
    i = 0
    while 2 ** i <= n:
        size = 2 ** i
        e = 0
        while size * (e + 1) <= n:
            gens.append(Generator(f"alpha_{i},{e}", make_partition([2 * e + 1] * size, n)))
            e += 1
        i += 1
    return sorted(gens, key=lambda g: (g.degree, g.partition))


def alpha_count(n: int) -> int:
    """sum_{i>=1} floor(n / 2^i), checked against n - (binary ones of n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, m = 0, n // 2
    while m:
        total += m
        m //= 2
    assert total == n - bin(n).count("1")
    return total


def alpha_identity_check(n_max: int) -> int | None:
    """First n <= n_max where the two formulas differ, else None.

    Uses floor-sum(n) = n//2 + floor-sum(n//2) to fill a table.
    """
    table = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        table[n] = n // 2 + table[n // 2]
        if table[n] != n - bin(n).count("1"):
            return n
    return None


# -- graded pieces and decomposables ------------------------------------------

def _grade(p: Partition, bigraded: bool) -> Grade:
    return (sum(p), weight(p)) if bigraded else sum(p)


def graded_basis(n: int, deg_max: int, bigraded: bool = False) -> dict[Grade, list[Partition]]:
    """Orbit basis of L_n in every (bi)degree with topological degree <= deg_max."""
    out: dict = {}
    for d in range(deg_max + 1):
        for p in enumerate_partitions(d, n):
            out.setdefault(_grade(p, bigraded), []).append(p)
    return out


class DecomposableSpace:
    """The span of I^2 in each graded piece of L_n up to ``deg_max``.

    Products of two positive-degree basis classes span I^2, so each piece
    is the row space of those products written in the orbit basis.
    """

    def __init__(self, n: int, deg_max: int, bigraded: bool = False):
        self.n = n
        self.deg_max = deg_max
        self.bigraded = bigraded
        self.pieces = graded_basis(n, deg_max, bigraded)
        self.index = {g: {p: i for i, p in enumerate(ps)} for g, ps in self.pieces.items()}
        self._spans: dict[Grade, EchelonBasis] = {}

    def vector(self, element: Iterable[Partition]) -> tuple[Grade | None, int]:
        v, grade = 0, None
        for p in element:
            g = _grade(p, self.bigraded)
            if grade is None:
                grade = g
            elif g != grade:
                raise ValueError("element is not homogeneous")
            v ^= 1 << self.index[g][p]
        return grade, v

    def span(self, grade: Grade) -> EchelonBasis:
        if grade not in self._spans:
            self._spans[grade] = self._build(grade)
        return self._spans[grade]

    def _build(self, grade: Grade) -> EchelonBasis:
        space = EchelonBasis()
        if grade not in self.pieces:
            return space
        idx = self.index[grade]
        if self.bigraded:
            d, w = grade
            splits = [((d1, w1), (d - d1, w - w1)) for d1 in range(1, d // 2 + 1)
                      for w1 in range(0, w + 1)]
        else:
            d = grade
            splits = [(d1, d - d1) for d1 in range(1, d // 2 + 1)]
        for g1, g2 in splits:
            left = self.pieces.get(g1, [])
            right = self.pieces.get(g2, [])
            for i, lam in enumerate(left):
                for j, mu in enumerate(right):
                    if g1 == g2 and j < i:
                        continue
                    key = (lam, mu) if lam <= mu else (mu, lam)
                    v = 0
                    for nu in basis_product(*key):
                        v ^= 1 << idx[nu]
                    space.add(v)
                    if space.rank == len(idx):
                        return space
        return space

    def quotient_rank(self, grade: Grade) -> int:
        return len(self.pieces.get(grade, [])) - self.span(grade).rank

    def quotient_ranks(self) -> dict[Grade, int]:
        out = {}
        for g in sorted(self.pieces):
            if g in (0, (0, 0)):
                continue
            r = self.quotient_rank(g)
            if r:
                out[g] = r
        return out

    def is_decomposable(self, element: Iterable[Partition]) -> bool:
        grade, v = self.vector(element)
        return grade is None or self.span(grade).contains(v)


@lru_cache(maxsize=64)
def decomposable_space(n: int, deg_max: int, bigraded: bool = False) -> DecomposableSpace:
    return DecomposableSpace(n, deg_max, bigraded)


def jtilde_quotient_ranks(n: int, deg_max: int, bigraded: bool = False) -> dict[Grade, int]:
    """Dimensions of I/I^2 per degree (or bidegree) up to ``deg_max``."""
    return decomposable_space(n, deg_max, bigraded).quotient_ranks()


def predicted_quotient_ranks(n: int, deg_max: int, bigraded: bool = False) -> dict[Grade, int]:
    out: dict = {}
    for g in indecomposable_basis_Ln(n):
        if g.degree <= deg_max:
            key = g.bidegree if bigraded else g.degree
            out[key] = out.get(key, 0) + 1
    return out


def is_decomposable(element: LnElement | Partition, deg_max: int | None = None) -> bool:
    terms = element.terms if isinstance(element, LnElement) else [tuple(element)]
    if not terms:
        return True
    n = len(next(iter(terms)))
    top = max(sum(t) for t in terms)
    return decomposable_space(n, max(top, deg_max or 0)).is_decomposable(terms)


# -- decomposability witnesses -------------------------------------------------

class NotDecomposable:
    """No criterion from the bound/free lemmas applies to this class."""

    def __init__(self, partition: Partition, reason: str):
        self.partition = partition
        self.reason = reason

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"NotDecomposable({list(self.partition)}: {self.reason})"


@dataclass
class Certificate:
    """[m] = x*y + (sum of residual classes), each residual class certified too.

    ``rule`` names the criterion used: ``bound+free``, ``unequal-powers``,
    ``odd-binomial``, or ``beyond-range`` (the last is checked by linear
    algebra instead of a product).
    """

    partition: Partition
    rule: str
    factors: tuple[Partition, Partition] | None = None
    residual: list[tuple[Partition, "Certificate"]] = field(default_factory=list)
    validated: bool = False

    def __bool__(self) -> bool:
        return True

    def render(self) -> str:
        head = f"{list(self.partition)} via {self.rule}"
        if self.factors:
            head += f": {list(self.factors[0])} * {list(self.factors[1])}"
        if self.residual:
            head += " + " + " + ".join(str(list(p)) for p, _ in self.residual)
        return head


def split_monomial(p: Partition) -> tuple[list[int], int, list[int]]:
    """(b-powers of bound indices, number of free a's, powers of free b's)."""
    bound = [x // 2 for x in p if x % 2 and x > 1]
    free_a = sum(1 for x in p if x == 1)
    free_b = [x // 2 for x in p if x and x % 2 == 0]
    return bound, free_a, free_b


def _is_pow2(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def decomposability_witness(m: Partition, n: int | None = None,
                            _depth: int = 0) -> Certificate | NotDecomposable:
    """Certify [m] decomposable using the bound/free criteria, if possible."""
    n = n or len(m)
    p = make_partition(m, n)
    bound, free_a, free_b = split_monomial(p)
    bound_parts = [2 * d + 1 for d in bound]
    b_parts = [2 * e for e in free_b]

    def attempt(rule: str, left: list[int], right: list[int]) -> Certificate | None:
        x = make_partition(left, n)
        y = make_partition(right, n)
        prod = basis_product(*sorted((x, y)))
        if p not in prod:
            return None
        cert = Certificate(p, rule, (x, y))
        for q in sorted(prod - {p}):
            sub = decomposability_witness(q, n, _depth + 1)
            if not sub:
                return None
            cert.residual.append((q, sub))
        cert.validated = True
        return cert

    if bound and free_a:
        cert = attempt("bound+free", bound_parts, [1] * free_a + b_parts)
        if cert:
            return cert
    if not free_a and bound and len(set(bound)) > 1:
        f = min(bound)
        high = [2 * d + 1 for d in bound if d > f]
        low = [2 * f + 1] * bound.count(f)
        cert = attempt("unequal-powers", high, low + b_parts)
        if cert:
            return cert
    if not free_a and not free_b and bound and len(set(bound)) == 1:
        size, e = len(bound), bound[0]
        if not _is_pow2(size):
            i = next(i for i in range(1, size) if comb(size, i) & 1)
            cert = attempt("odd-binomial", [2 * e + 1] * i, [2 * e + 1] * (size - i))
            if cert:
                return cert
        elif e > n / size - 1:
            if is_decomposable(p):
                return Certificate(p, "beyond-range", validated=True)
    if not bound and not free_b and free_a and not _is_pow2(free_a):
        i = next(i for i in range(1, free_a) if comb(free_a, i) & 1)
        cert = attempt("odd-binomial", [1] * i, [1] * (free_a - i))
        if cert:
            return cert
    return NotDecomposable(p, "no bound/free criterion applies")


# -- exterior invariants -------------------------------------------------------

def exterior_invariant_dims(n: int) -> list[int]:
    """dim Lambda(a_1..a_n)^{S_n} in each degree, by brute-force linear algebra.

    A vector on the r-subsets is invariant iff it is fixed by every adjacent
    transposition, so the invariant dimension is the nullity of the stacked
    maps (s_i - 1).
    """
    dims = []
    for r in range(n + 1):
        subsets = [frozenset(c) for c in combinations(range(n), r)]
        pos = {s: i for i, s in enumerate(subsets)}
        rows = EchelonBasis()
        for i in range(n - 1):
            for s in subsets:
                t = frozenset(i + 1 if x == i else i if x == i + 1 else x for x in s)
                if t != s:
                    rows.add((1 << pos[s]) ^ (1 << pos[t]))
        dims.append(len(subsets) - rows.rank)
    return dims


def exterior_invariants_check(n: int) -> Report:
    rep = Report(f"exterior invariants, n={n}")
    rep.check("dim of invariants per degree is 1 for 0..n", [1] * (n + 1),
              exterior_invariant_dims(n))
    rule_ok = True
    for r in range(n + 1):
        for s in range(n + 1):
            got = ln_mul(sigma_a(r, n), sigma_a(s, n))
            want = sigma_a(r + s, n) if r + s <= n and comb(r + s, r) & 1 else LnElement(n)
            rule_ok &= got == want
    rep.check("sigma_r * sigma_s = C(r+s, r) sigma_(r+s)", True, rule_ok)
    powers = [2 ** i for i in range(n.bit_length()) if 2 ** i <= n]
    pres_ok = True
    for size in range(len(powers) + 1):
        for combo in combinations(powers, size):
            prod = ln_one(n)
            for t in combo:
                prod = ln_mul(prod, sigma_a(t, n))
            total = sum(combo)
            want = sigma_a(total, n) if total <= n else LnElement(n)
            pres_ok &= prod == want
    squares = all(not ln_mul(sigma_a(t, n), sigma_a(t, n)) for t in powers)
    rep.check("square-free products of sigma_(2^i) give sigma_(sum), zero past n", True, pres_ok)
    rep.check("sigma_(2^i)^2 = 0", True, squares)
    return rep


# -- stable range --------------------------------------------------------------

def restrict(x: LnElement) -> LnElement:
    """The map L_{n+1} -> L_n killing every monomial that uses index n+1."""
    out = set()
    for p in x.terms:
        if p[0] == 0:
            out ^= {p[1:]}
    return LnElement(x.n - 1, out)


def restriction_check(n: int, deg_max: int, samples: int = 60, seed: int = 0) -> Report:
    import random

    rng = random.Random(seed)
    rep = Report(f"restriction L_{n + 1} -> L_{n}")
    big = graded_basis(n + 1, deg_max)
    small = graded_basis(n, deg_max)
    surj = all(make_partition(p, n + 1) in set(big.get(d, [])) for d, ps in small.items()
               for p in ps)
    rep.check("surjective on the orbit basis", True, surj)
    iso = [d for d in range(min(n, deg_max) + 1) if len(big.get(d, [])) != len(small.get(d, []))]
    rep.check("bijective in degrees <= n", [], iso)
    hom = True
    degs = [d for d in big if d > 0]
    for _ in range(samples):
        d1, d2 = rng.choice(degs), rng.choice(degs)
        if d1 + d2 > deg_max:
            continue
        x = LnElement(n + 1, [rng.choice(big[d1])])
        y = LnElement(n + 1, [rng.choice(big[d2])])
        hom &= restrict(ln_mul(x, y)) == ln_mul(restrict(x), restrict(y))
    rep.check("restriction is multiplicative", True, hom)
    return rep


def eta(p: Partition) -> tuple[int, ...]:
    """v-monomial of an orbit sum: one v_d per pure factor of degree d."""
    return tuple(sorted(x for x in p if x))


def eta_of_monomial(eps: Iterable[int], d: Iterable[int]) -> tuple[int, ...]:
    """Split a monomial a^eps b^d into pure factors and record their degrees."""
    return tuple(sorted(e + 2 * x for e, x in zip(eps, d) if e or x))


def eta_inverse(v: Iterable[int], n: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A monomial (eps, d) with the given v-degrees, indices assigned in order."""
    degs = sorted(v)
    if any(x < 1 for x in degs):
        raise ValueError("v-degrees must be positive")
    n = n or len(degs)
    if len(degs) > n:
        raise ValueError(f"{len(degs)} pure factors do not fit in {n} indices")
    eps = tuple(x & 1 for x in degs) + (0,) * (n - len(degs))
    d = tuple(x // 2 for x in degs) + (0,) * (n - len(degs))
    return eps, d


def render_kn_monomial(eps: Iterable[int], d: Iterable[int]) -> str:
    parts = []
    for i, (e, x) in enumerate(zip(eps, d), start=1):
        if e:
            parts.append(f"a{i}")
        if x == 1:
            parts.append(f"b{i}")
        elif x > 1:
            parts.append(f"b{i}^{x}")
    return " ".join(parts) if parts else "1"


def partition_number(d: int) -> int:
    return _at_most(d, d)


def exterior_times_polynomial_series(deg_max: int) -> list[int]:
    """Poincare series of Lambda(one generator per degree) (x) F2[sigma_i(b)]."""
    series = [1] + [0] * deg_max
    for r in range(1, deg_max + 1):  # (1 + t^r)
        for d in range(deg_max, r - 1, -1):
            series[d] += series[d - r]
    for i in range(1, deg_max // 2 + 1):  # 1 / (1 - t^(2i))
        step = 2 * i
        for d in range(step, deg_max + 1):
            series[d] += series[d - step]
    return series


def eta_series_check(deg_max: int, n: int) -> Report:
    if n < deg_max:
        raise ValueError("the stable comparison needs n >= deg_max")
    rep = Report(f"eta series, n={n}, degree <= {deg_max}")
    ln_dims = [len(enumerate_partitions(d, n)) for d in range(deg_max + 1)]
    s_dims = [partition_number(d) for d in range(deg_max + 1)]
    d_dims = exterior_times_polynomial_series(deg_max)
    rep.check("dim L_n = dim F2[v_1, v_2, ...] per degree", s_dims, ln_dims)
    rep.check("dim of exterior(alpha) (x) poly(sigma(b)) per degree", s_dims, d_dims)
    bij = True
    for d in range(deg_max + 1):
        images = {eta(p) for p in enumerate_partitions(d, n)}
        bij &= len(images) == ln_dims[d] and all(sum(v) == d for v in images)
    rep.check("eta is injective and degree preserving", True, bij)
    return rep


# -- lemma le:in3 samples ------------------------------------------------------

def in3_samples(n: int, deg_max: int) -> list[tuple[str, Partition, Partition]]:
    """Pairs of classes that should agree modulo decomposables in L_n."""
    out = []
    for k in range(1, n + 1):
        for e in range(0, deg_max):
            for r in range(k, n - k + 1):
                lhs = make_partition([2 * e + 1] * k + [2] * r, n)
                rhs = make_partition([2 * e + 3] * k + [2] * (r - k), n)
                if sum(lhs) <= deg_max:
                    out.append((f"shift k={k} e={e} r={r}", lhs, rhs))
            if e >= 1 and k * e <= n and k * (2 * e + 1) <= deg_max:
                lhs = make_partition([2 * e + 1] * k, n)
                rhs = make_partition([3] * k + [2] * (k * e - k), n)
                out.append((f"spread k={k} e={e}", lhs, rhs))
            if k + k * e <= n and k * (2 * e + 1) <= deg_max:
                lhs = make_partition([2 * e + 1] * k, n)
                rhs = make_partition([1] * k + [2] * (k * e), n)
                out.append((f"separate k={k} e={e}", lhs, rhs))
    return out


def in3_check(n: int, deg_max: int) -> Report:
    rep = Report(f"bound/free shift identities in L_{n}")
    space = decomposable_space(n, deg_max)
    bad = [label for label, lhs, rhs in in3_samples(n, deg_max)
           if not space.is_decomposable([lhs, rhs] if lhs != rhs else [])]
    rep.check(f"{len(in3_samples(n, deg_max))} sampled identities hold mod I^2", [], bad)
    return rep


def appendix_report(n: int, deg_max: int, alpha_max: int = 10 ** 6) -> Report:
    rep = Report(f"deRham invariants L_{n}, degree <= {deg_max}")
    computed = jtilde_quotient_ranks(n, deg_max)
    predicted = predicted_quotient_ranks(n, deg_max)
    rep.check("I/I^2 ranks per degree (predicted basis vs linear algebra)", predicted, computed)
    gens = indecomposable_basis_Ln(n)
    rep.check("number of generators = 3n - ones(n)", 3 * n - bin(n).count("1"), len(gens))
    if deg_max >= 2 * n:
        rep.check("total rank of I/I^2", len(gens), sum(computed.values()))
    rep.extend(exterior_invariants_check(n))
    rep.extend(in3_check(n, deg_max))
    eta_deg = min(deg_max, 12)
    rep.extend(eta_series_check(eta_deg, max(n, eta_deg)))
    rep.extend(restriction_check(n, min(deg_max, 10)))
    rep.check(f"alpha(n) = n - ones(n) for n <= {alpha_max}", None, alpha_identity_check(alpha_max))
    return rep

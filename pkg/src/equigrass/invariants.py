"""The ring Inv_k of S_k-invariants in (M2[a,b]/(a^2 = rho a + tau b))^{(x)k}.

Inv_k is free over M2 on the orbit sums [m], one per partition with k
parts (part 2r is b^r at one index, part 2r+1 is a b^r).  An
``InvariantElement`` maps partitions to M2 coefficients.

Two product routes exist.  The fast one works orbit by orbit through the
compiled kernel.  The slow one expands both factors into T_k monomials,
multiplies, rewrites a^2 and collects orbits again; it is kept as an
independent oracle.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from itertools import product as cartesian
from typing import Iterable, Mapping, Union

from . import _kernels
from .charts import RankChart
from .derham import decomposable_space
from .m2 import ONE, RHO, TAU, M2Element, rho_tau
from .partitions import (Partition, bidegree, count_prt, enumerate_partitions,
                         format_partition, make_partition, orbit_size, weight)
from .report import Report
from .symmetric import EPoly, epoly_mul, parse_epoly, render_epoly, to_elementary

Scalar = Union[M2Element, int]


class NotInvariant(ValueError):
    """A T_k element whose coefficients differ inside one S_k-orbit."""

    def __init__(self, orbit: Partition, witnesses: dict):
        self.orbit = orbit
        self.witnesses = witnesses
        shown = ", ".join(f"{_render_tk(m)}: {c}" for m, c in list(witnesses.items())[:4])
        super().__init__(f"not invariant on the orbit {format_partition(orbit)} ({shown})")


# -- T_k: the polynomial level -----------------------------------------------

TkMonomial = tuple[tuple[int, ...], tuple[int, ...]]  # (eps, d)


@lru_cache(maxsize=None)
def _a_power(e: int) -> tuple[tuple[int, int, int, int], ...]:
    """a^e in normal form: terms (rho power, tau power, a exponent, b exponent)."""
    if e == 0:
        return ((0, 0, 0, 0),)
    acc: dict = {}
    for r, t, a, b in _a_power(e - 1):
        if a == 0:
            outs = [(r, t, 1, b)]
        else:  # a * a = rho a + tau b
            outs = [(r + 1, t, 1, b), (r, t + 1, 0, b + 1)]
        for term in outs:
            acc[term] = acc.get(term, 0) ^ 1
    return tuple(sorted(k for k, v in acc.items() if v))


class TkElement:
    """Polynomial in a_i, b_i with M2 coefficients, kept in normal form."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[TkMonomial, M2Element] | None = None):
        self.k = k
        self.terms: dict[TkMonomial, M2Element] = {}
        for m, c in (terms or {}).items():
            self._add_term(m, c)

    def _add_term(self, m: TkMonomial, c: M2Element) -> None:
        new = self.terms.get(m, M2Element()) + c
        if new:
            self.terms[m] = new
        else:
            self.terms.pop(m, None)

    def __eq__(self, other) -> bool:
        return isinstance(other, TkElement) and self.k == other.k and self.terms == other.terms

    def __add__(self, other: "TkElement") -> "TkElement":
        out = TkElement(self.k, self.terms)
        for m, c in other.terms.items():
            out._add_term(m, c)
        return out

    def __mul__(self, other: "TkElement") -> "TkElement":
        raw: list = []
        for (e1, d1), c1 in self.terms.items():
            for (e2, d2), c2 in other.terms.items():
                a = tuple(x + y for x, y in zip(e1, e2))
                b = tuple(x + y for x, y in zip(d1, d2))
                raw.append((a, b, c1 * c2))
        return normalize(self.k, raw)

    def bidegrees(self) -> set[tuple[int, int]]:
        out = set()
        for (eps, d), c in self.terms.items():
            mp, mq = sum(eps) + 2 * sum(d), sum(eps) + sum(d)
            for t in c.terms:
                cp, cq = t.bidegree
                out.add((mp + cp, mq + cq))
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            coef = "" if c == ONE else (f"({c.render()}) " if len(c) > 1 else c.render() + " ")
            parts.append(coef + _render_tk(m))
        return " + ".join(parts)

    __str__ = render


def _render_tk(m: TkMonomial) -> str:
    eps, d = m
    out = []
    for i, (e, x) in enumerate(zip(eps, d), start=1):
        if e:
            out.append(f"a{i}")
        if x:
            out.append(f"b{i}" + (f"^{x}" if x > 1 else ""))
    return " ".join(out) if out else "1"


def normalize(k: int, raw: Iterable[tuple[Iterable[int], Iterable[int], Scalar]]) -> TkElement:
    """Rewrite a_i^2 -> rho a_i + tau b_i until every a exponent is 0 or 1.

    ``raw`` holds (a exponents, b exponents, coefficient) triples with
    arbitrary nonnegative exponents.
    """
    out = TkElement(k)
    for a_exps, b_exps, c in raw:
        a_exps, b_exps = tuple(a_exps), tuple(b_exps)
        if len(a_exps) != k or len(b_exps) != k:
            raise ValueError(f"exponent vectors must have length {k}")
        if isinstance(c, int):
            c = ONE if c & 1 else M2Element()
        if not c:
            continue
        for choice in cartesian(*(_a_power(e) for e in a_exps)):
            r = sum(x[0] for x in choice)
            t = sum(x[1] for x in choice)
            eps = tuple(x[2] for x in choice)
            d = tuple(x[3] + b for x, b in zip(choice, b_exps))
            out._add_term((eps, d), c * rho_tau(r, t))
    return out


def pure_degrees(m: TkMonomial) -> tuple[int, ...]:
    eps, d = m
    return tuple(e + 2 * x for e, x in zip(eps, d))


def orbit_key(m: TkMonomial) -> Partition:
    return tuple(sorted(pure_degrees(m)))


def orbit_monomials(p: Partition) -> list[TkMonomial]:
    out = []
    for v in _kernels.distinct_permutations(p):
        out.append((tuple(x & 1 for x in v), tuple(x // 2 for x in v)))
    return out


def expand(x: "InvariantElement") -> TkElement:
    out = TkElement(x.k)
    for p, c in x.coeffs.items():
        for m in orbit_monomials(p):
            out._add_term(m, c)
    return out


def to_basis(e: TkElement, strict: bool = True) -> "InvariantElement":
    """Collect an invariant T_k element into orbit sums.

    With ``strict`` every monomial of an orbit must carry the same
    coefficient, otherwise ``NotInvariant`` is raised.  Without it the
    coefficient of the ascending (canonical) representative is used.
    """
    groups: dict[Partition, dict[TkMonomial, M2Element]] = {}
    for m, c in e.terms.items():
        groups.setdefault(orbit_key(m), {})[m] = c
    coeffs = {}
    for p, members in groups.items():
        rep = (tuple(x & 1 for x in p), tuple(x // 2 for x in p))
        if strict:
            values = set(members.values())
            if len(members) != orbit_size(p) or len(values) != 1:
                raise NotInvariant(p, members)
            coeffs[p] = next(iter(values))
        elif rep in members:
            coeffs[p] = members[rep]
    return InvariantElement(e.k, coeffs)


def symmetrize(e: TkElement) -> "InvariantElement":
    """Sum of the orbit sums of every monomial (the transfer), term by term."""
    acc = InvariantElement(e.k)
    for m, c in e.terms.items():
        acc = acc + InvariantElement(e.k, {orbit_key(m): c})
    return acc


def orbit_sum(m: TkMonomial) -> "InvariantElement":
    eps, d = m
    if any(x not in (0, 1) for x in eps):
        raise ValueError("monomial is not in normal form")
    return InvariantElement(len(eps), {orbit_key(m): ONE})


# -- Inv_k ---------------------------------------------------------------------

@lru_cache(maxsize=500_000)
def basis_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int, int], ...]:
    """[lam]*[mu] as (nu, rho power, tau power) triples, coefficient 1 each.

    Every rho lowers the pure degree at one index by one, so the rho
    power is the drop in topological degree; the tau power is the rest of
    the drop in weight.
    """
    counts = _kernels.orbit_product_counts(lam, mu, False)
    n_lam = orbit_size(lam)
    deg = sum(lam) + sum(mu)
    wt = weight(lam) + weight(mu)
    out = []
    for nu, c in counts.items():
        total = c * n_lam
        n_nu = orbit_size(nu)
        assert total % n_nu == 0
        if (total // n_nu) & 1:
            s = deg - sum(nu)
            out.append((nu, s, wt - weight(nu) - s))
    return tuple(sorted(out))


class InvariantElement:
    """M2-linear combination of orbit sums, keyed by partition."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Mapping[Partition, Scalar] | None = None):
        self.k = k
        self.coeffs: dict[Partition, M2Element] = {}
        for p, c in (coeffs or {}).items():
            p = tuple(p)
            if len(p) != k:
                raise ValueError(f"{p} does not have {k} parts")
            if isinstance(c, int):
                c = ONE if c & 1 else M2Element()
            self._add(p, c)

    def _add(self, p: Partition, c: M2Element) -> None:
        new = self.coeffs.get(p, M2Element()) + c
        if new:
            self.coeffs[p] = new
        else:
            self.coeffs.pop(p, None)

    @classmethod
    def basis(cls, p: Iterable[int], k: int | None = None) -> "InvariantElement":
        p = make_partition(p, k)
        return cls(len(p), {p: ONE})

    @classmethod
    def scalar(cls, c: Scalar, k: int) -> "InvariantElement":
        return cls(k, {(0,) * k: c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, InvariantElement) and self.k == other.k and \
            self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.coeffs.items())))

    def __add__(self, other) -> "InvariantElement":
        other = self._coerce(other)
        out = InvariantElement(self.k, self.coeffs)
        for p, c in other.coeffs.items():
            out._add(p, c)
        return out

    __radd__ = __add__
    __sub__ = __add__

    def _coerce(self, other) -> "InvariantElement":
        if isinstance(other, InvariantElement):
            if other.k != self.k:
                raise ValueError(f"mixing Inv_{self.k} and Inv_{other.k}")
            return other
        if isinstance(other, (M2Element, int)):
            return InvariantElement.scalar(other, self.k)
        raise TypeError(f"cannot combine with {type(other).__name__}")

    def __mul__(self, other) -> "InvariantElement":
        if isinstance(other, (M2Element, int)):
            c = other if isinstance(other, M2Element) else (ONE if other & 1 else M2Element())
            return InvariantElement(self.k, {p: v * c for p, v in self.coeffs.items()})
        return mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "InvariantElement":
        out = InvariantElement.scalar(ONE, self.k)
        for _ in range(e):
            out = out * self
        return out

    def terms(self) -> list[tuple[Partition, M2Element]]:
        return sorted(self.coeffs.items(), key=lambda pc: (pc[0], pc[1].render()))

    def bidegrees(self) -> set[tuple[int, int]]:
        out = set()
        for p, c in self.coeffs.items():
            bp, bq = bidegree(p)
            for t in c.terms:
                cp, cq = t.bidegree
                out.add((bp + cp, bq + cq))
        return out

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    @property
    def bidegree(self) -> tuple[int, int] | None:
        degs = self.bidegrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(degs), None)

    def mod_rho_tau(self) -> frozenset:
        """Partitions whose coefficient has constant term 1 (reduction mod (rho, tau))."""
        return frozenset(p for p, c in self.coeffs.items() if c.constant_term())

    def in_rho_tau_ideal(self) -> bool:
        return not self.mod_rho_tau()

    def render(self, names: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, c in self.terms():
            label = class_name(p) if names else None
            label = label or format_partition(p)
            if c == ONE:
                parts.append(label)
            elif len(c) == 1:
                parts.append(f"{c.render()} {label}")
            else:
                parts.append(f"({c.render()}) {label}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"InvariantElement(k={self.k}, {self.render()})"

    def to_json(self) -> list:
        return [{"partition": list(p), "coefficient": c.render()} for p, c in self.terms()]


def mul(x: InvariantElement, y: InvariantElement) -> InvariantElement:
    """Product in Inv_k through orbit-level counting."""
    if x.k != y.k:
        raise ValueError(f"mixing Inv_{x.k} and Inv_{y.k}")
    acc: dict[Partition, set] = {}
    for lam, c1 in x.coeffs.items():
        for mu, c2 in y.coeffs.items():
            key = (lam, mu) if lam <= mu else (mu, lam)
            c = c1 * c2
            if not c:
                continue
            for nu, s, t in basis_product(*key):
                term = c * rho_tau(s, t)
                slot = acc.setdefault(nu, set())
                slot ^= term.terms
    return InvariantElement(x.k, {p: M2Element(ts) for p, ts in acc.items() if ts})


def slow_mul(x: InvariantElement, y: InvariantElement) -> InvariantElement:
    """Product by full expansion in T_k (reference implementation)."""
    return to_basis(expand(x) * expand(y))


# -- named classes -------------------------------------------------------------

def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def class_wc(i: int, j: int, k: int) -> InvariantElement:
    """wc_{i,j} = [a_1..a_i b_{i+1}..b_{i+j}]."""
    _need(i >= 0 and j >= 0 and i + j <= k, f"wc_({i},{j}) needs i, j >= 0 and i + j <= {k}")
    return InvariantElement.basis([1] * i + [2] * j, k)


def class_w(i: int, k: int) -> InvariantElement:
    _need(1 <= i <= k, f"w_{i} needs 1 <= i <= {k}")
    return class_wc(i, 0, k)


def class_c(i: int, k: int) -> InvariantElement:
    _need(1 <= i <= k, f"c_{i} needs 1 <= i <= {k}")
    return class_wc(0, i, k)


def class_w_e(i: int, e: int, k: int) -> InvariantElement:
    """w_i^(e) = [a_1..a_i b_1^e..b_i^e]."""
    _need(1 <= i <= k and e >= 0, f"w_{i}^({e}) needs 1 <= i <= {k} and e >= 0")
    return InvariantElement.basis([2 * e + 1] * i, k)


def one(k: int) -> InvariantElement:
    return InvariantElement.scalar(ONE, k)


def class_name(p: Partition) -> str | None:
    """Name of a basis class when it is one of w_i, c_j, wc_{i,j}, w_i^(e)."""
    nz = [x for x in p if x]
    if not nz:
        return "1"
    ones, twos = nz.count(1), nz.count(2)
    if ones + twos == len(nz):
        if twos == 0:
            return f"w_{ones}"
        if ones == 0:
            return f"c_{twos}"
        return f"wc_{{{ones},{twos}}}"
    if len(set(nz)) == 1 and nz[0] % 2:
        return f"w_{len(nz)}^({nz[0] // 2})"
    return None


# -- c-polynomials and Newton ---------------------------------------------------

CPoly = frozenset  # frozenset of exponent tuples (c_1..c_k), F2 coefficients


def cpoly_mul(f: CPoly, g: CPoly) -> CPoly:
    return epoly_mul(f, g)


def cpoly_eval(f: CPoly, k: int) -> InvariantElement:
    """Evaluate a polynomial in c_1..c_k inside Inv_k."""
    cs = [class_c(i, k) for i in range(1, k + 1)]
    acc = InvariantElement(k)
    for exps in f:
        term = one(k)
        for c, e in zip(cs, exps):
            for _ in range(e):
                term = term * c
        acc = acc + term
    return acc


def render_cpoly(f: CPoly) -> str:
    return render_epoly(f, "c")


@lru_cache(maxsize=None)
def newton_power_sum(n: int, k: int) -> CPoly:
    """[b_1^n] as a polynomial in c_1..c_k over F2.

    p_n = c_1 p_{n-1} + c_2 p_{n-2} + ... + c_{n-1} p_1 + n c_n, signs
    dropped mod 2.
    """
    if n < 1:
        raise ValueError("n must be at least 1")

    def unit(i: int) -> CPoly:
        return frozenset({tuple(1 if j == i else 0 for j in range(1, k + 1))})

    acc: set = set()
    for i in range(1, min(n - 1, k) + 1):
        acc ^= cpoly_mul(unit(i), newton_power_sum(n - i, k))
    if n <= k and n % 2:
        acc ^= unit(n)
    return frozenset(acc)


def power_sum_class(n: int, k: int) -> InvariantElement:
    return InvariantElement.basis([2 * n], k)


def w1e_reduce(e: int, k: int) -> InvariantElement:
    """w_1^(e-1) c_1 + w_1^(e-2) c_2 + ... + w_1^(e-k) c_k."""
    _need(e >= k, f"the reduction of w_1^({e}) needs e >= k = {k}")
    acc = InvariantElement(k)
    for j in range(1, k + 1):
        acc = acc + class_w_e(1, e - j, k) * class_c(j, k)
    return acc


def square_w_e(i: int, e: int, k: int) -> InvariantElement:
    x = class_w_e(i, e, k)
    return x * x


def predicted_square_w(j: int, k: int) -> InvariantElement:
    """sum_s tau^(j-s) rho^s wc_{s, j-s}."""
    acc = InvariantElement(k)
    for s in range(j + 1):
        acc = acc + class_wc(s, j - s, k) * rho_tau(s, j - s)
    return acc


def predicted_square_w1e(e: int, k: int) -> InvariantElement:
    """rho w_1^(2e) + tau N_{2e+1}(c)."""
    return class_w_e(1, 2 * e, k) * RHO + cpoly_eval(newton_power_sum(2 * e + 1, k), k) * TAU


# -- rank charts -------------------------------------------------------------

def rank_chart_inv(k: int, p_max: int) -> RankChart:
    """rank^{p,q} = prt(p, k, 2q - p)."""
    entries = []
    for p in range(p_max + 1):
        for j in range(k + 1):
            if (p - j) % 2 == 0:
                c = count_prt(p, k, j)
                if c:
                    entries.append((p, (p + j) // 2, c))
    return RankChart(entries, k=k, p_max=p_max)


def rank_chart_inv_enum(k: int, p_max: int) -> RankChart:
    degs = (bidegree(p) for n in range(p_max + 1) for p in enumerate_partitions(n, k))
    return RankChart.from_bidegrees(degs, k=k, p_max=p_max)


# -- forgetful map ---------------------------------------------------------------

def forgetful(x: InvariantElement) -> EPoly:
    """tau -> 1, rho -> 0, b_i -> a_i^2; the image in F2[w_1..w_k].

    [lam] becomes the monomial symmetric function with exponents lam.
    """
    sym = frozenset(p for p, c in x.coeffs.items() if c.forget())
    return to_elementary(sym, x.k)


def render_forget(f: EPoly) -> str:
    return render_epoly(f, "w")


# -- indecomposables ------------------------------------------------------------

def indecomposable_ranks(k: int, deg_max: int) -> RankChart:
    """Bigraded ranks of I/(I^2 + (rho, tau) I), computed in L_k."""
    ranks = decomposable_space(k, deg_max, True).quotient_ranks()
    return RankChart(ranks, k=k, p_max=deg_max)


def predicted_indecomposables(k: int) -> list[tuple[str, Partition]]:
    gens = [(f"c_{i}", make_partition([2] * i, k)) for i in range(1, k + 1)]
    i = 0
    while 2 ** i <= k:
        size = 2 ** i
        e = 0
        while size * (e + 1) <= k:
            gens.append((f"w_{size}^({e})", make_partition([2 * e + 1] * size, k)))
            e += 1
        i += 1
    return gens


def predicted_indecomposable_chart(k: int, deg_max: int) -> RankChart:
    """One class per odd p at q = (p+1)/2; for even p = 2^i (2e+1) one at
    q = p/2 and one at q = p/2 + 2^(i-1); only weights q <= k survive."""
    entries = []
    for p in range(1, deg_max + 1):
        if p % 2:
            cands = [(p + 1) // 2]
        else:
            i = (p & -p).bit_length() - 1
            cands = [p // 2, p // 2 + 2 ** (i - 1)]
        entries += [(p, q, 1) for q in cands if q <= k]
    return RankChart(entries, k=k, p_max=deg_max)


def is_decomposable_mod_rho_tau(x: InvariantElement, deg_max: int | None = None) -> bool:
    """Whether x lies in I^2 + (rho, tau) after reduction to L_k."""
    reduced = x.mod_rho_tau()
    if not reduced:
        return True
    top = max(sum(p) for p in reduced)
    space = decomposable_space(x.k, max(top, deg_max or 0), True)
    return space.is_decomposable(reduced)


# -- verification suites --------------------------------------------------------

class Ctx:
    """Shorthand constructors for one value of k."""

    def __init__(self, k: int):
        self.k = k

    def w(self, i: int, e: int = 0) -> InvariantElement:
        return class_w_e(i, e, self.k)

    def c(self, i: int) -> InvariantElement:
        return class_c(i, self.k)

    def wc(self, i: int, j: int) -> InvariantElement:
        return class_wc(i, j, self.k)

    @property
    def one(self) -> InvariantElement:
        return one(self.k)


def _show(x: InvariantElement) -> str:
    return x.render(names=True)


def _exact(rep: Report, label: str, lhs: InvariantElement, rhs: InvariantElement) -> bool:
    return rep.check(label, _show(rhs), _show(lhs))


def _modulo(rep: Report, label: str, lhs: InvariantElement, rhs: InvariantElement) -> bool:
    diff = lhs + rhs
    ok = rep.check(label + " (mod rho, tau)", True, diff.in_rho_tau_ideal())
    rep.note(f"computed remainder for {label}: {_show(diff) if diff else '0'}")
    return ok


def _c_monomials(k: int, bidegree_max: int) -> list[tuple[tuple[int, ...], tuple[int, int]]]:
    """Monomials in c_1..c_k with topological degree <= bidegree_max."""
    out = [((0,) * k, (0, 0))]
    for i in range(1, k + 1):
        grown = []
        for exps, (p, q) in out:
            e = 0
            while p + 2 * i * e <= bidegree_max:
                new = list(exps)
                new[i - 1] = e
                grown.append((tuple(new), (p + 2 * i * e, q + i * e)))
                e += 1
        out = grown
    return out


def module_basis_check(gens: list[InvariantElement], k: int, deg_max: int,
                       label: str) -> Report:
    """Freeness of Inv_k over M2[c] on ``gens``, up to topological degree deg_max.

    Two checks: the rank chart of the free module equals the chart of Inv_k,
    and modulo (rho, tau) the products gen * c^alpha are a basis of every
    bigraded piece of L_k.
    """
    rep = Report(label)
    cmons = _c_monomials(k, deg_max)
    shifted: dict = {}
    for g in gens:
        gp, gq = g.bidegree
        for _, (p, q) in cmons:
            if gp + p <= deg_max:
                shifted[(gp + p, gq + q)] = shifted.get((gp + p, gq + q), 0) + 1
    target = rank_chart_inv(k, deg_max)
    rep.check(f"rank chart of the free M2[c]-module = rank chart of Inv_{k} (p <= {deg_max})",
              True, RankChart(shifted, k=k, p_max=deg_max) == target)
    cpows = {}
    for exps, _ in cmons:
        cpows[exps] = cpoly_eval(frozenset({exps}), k)
    space = decomposable_space(k, deg_max, True)
    rows: dict = {}
    for g in gens:
        gp, _ = g.bidegree
        for exps, (p, _) in cmons:
            if gp + p > deg_max:
                continue
            prod = g * cpows[exps]
            grade, v = space.vector(prod.mod_rho_tau())
            rows.setdefault(grade, []).append(v)
    from .gf2 import rank as gf2_rank

    bad = []
    for grade, ps in space.pieces.items():
        vs = rows.get(grade, [])
        if gf2_rank(vs) != len(ps) or len(vs) != len(ps):
            bad.append(grade)
    rep.check("reductions mod (rho, tau) form a basis of each bigraded piece", [], sorted(bad))
    return rep


def verify_presentation(k: int, deg_max: int = 14) -> Report:
    if k not in (2, 3):
        raise ValueError("presentations are listed for k = 2 and k = 3")
    C = Ctx(k)
    w1, w2, w11, c1, c2 = C.w(1), C.w(2), C.w(1, 1), C.c(1), C.c(2)
    r, t = RHO, TAU
    rep = Report(f"presentation of Inv_{k}")
    if k == 2:
        _exact(rep, "w1^2 = rho w1 + tau c1", w1 * w1, w1 * r + c1 * t)
        _exact(rep, "w2^2 = rho^2 w2 + rho tau (w1 c1 + w1^(1)) + tau^2 c2", w2 * w2,
               w2 * (r * r) + (w1 * c1 + w11) * (r * t) + c2 * (t * t))
        _exact(rep, "[w1^(1)]^2 = rho (w1^(1) c1 + w1 c2) + tau (c1^3 + c1 c2)", w11 * w11,
               (w11 * c1 + w1 * c2) * r + (c1 ** 3 + c1 * c2) * t)
        _exact(rep, "w1 w2 = rho w2 + tau (w1 c1 + w1^(1))", w1 * w2,
               w2 * r + (w1 * c1 + w11) * t)
        # the two rho terms of (a1 + a2) a1 a2 cancel, leaving no rho w2
        _exact(rep, "w1 w2 = tau (w1 c1 + w1^(1)) (rho w2 dropped)", w1 * w2,
               (w1 * c1 + w11) * t)
        _exact(rep, "w1 w1^(1) = rho w1^(1) + tau c1^2 + w2 c1", w1 * w11,
               w11 * r + c1 * c1 * t + w2 * c1)
        _exact(rep, "w2 w1^(1) = rho w2 c1 + tau (w1 c1^2 + w1^(1) c1 + w1 c2)", w2 * w11,
               w2 * c1 * r + (w1 * c1 * c1 + w11 * c1 + w1 * c2) * t)
        rep.extend(module_basis_check([C.one, w1, w2, w11], 2, deg_max,
                                      "free basis 1, w1, w2, w1^(1) over M2[c1, c2]"))
        rep.check("forget(c1) = w1^2", "w1^2", render_forget(forgetful(c1)))
        rep.check("forget(c2) = w2^2", "w2^2", render_forget(forgetful(c2)))
        rep.check("forget(w1^(1)) = w1 w2 + w1^3", "w1^3 + w1 w2", render_forget(forgetful(w11)))
        rep.check("forget(w1) = w1, forget(w2) = w2", ("w1", "w2"),
                  (render_forget(forgetful(w1)), render_forget(forgetful(w2))))
        return rep
    w12, c3 = C.w(1, 2), C.c(3)
    _exact(rep, "w1^2 = rho w1 + tau c1", w1 * w1, w1 * r + c1 * t)
    _exact(rep, "w2^2 = rho^2 w2 + rho tau (w1 c1 + w1^(1)) + tau^2 c2", w2 * w2,
           w2 * (r * r) + (w1 * c1 + w11) * (r * t) + c2 * (t * t))
    _exact(rep, "[w1^(1)]^2 = rho w1^(2) + tau (c1^3 + c1 c2 + c3)", w11 * w11,
           w12 * r + (c1 ** 3 + c1 * c2 + c3) * t)
    _exact(rep, "[w1^(2)]^2 = rho (w1^(2) c1^2 + w1^(1) c1 c2 + w1 c1 c3 + w1^(2) c2 + "
           "w1^(1) c3) + tau (c1^5 + c1^3 c2 + c1^2 c3 + c1 c2^2 + c2 c3)", w12 * w12,
           (w12 * c1 * c1 + w11 * c1 * c2 + w1 * c1 * c3 + w12 * c2 + w11 * c3) * r
           + (c1 ** 5 + c1 ** 3 * c2 + c1 * c1 * c3 + c1 * c2 * c2 + c2 * c3) * t)
    _modulo(rep, "w2 w1^(1) = w1 w2 c1", w2 * w11, w1 * w2 * c1)
    _modulo(rep, "w2 w1^(2) = w1 w2 c1^2", w2 * w12, w1 * w2 * c1 * c1)
    _modulo(rep, "w1^(1) w1^(2) = w2 c3 + w2 c1 c2 + w1 w1^(1) c1^2 + w1 w1^(2) c1",
            w11 * w12, w2 * c3 + w2 * c1 * c2 + w1 * w11 * c1 * c1 + w1 * w12 * c1)
    gens = [C.one, w1, w11, w12, w2, w1 * w11, w1 * w12, w1 * w2]
    rep.extend(module_basis_check(gens, 3, deg_max, "free basis of Inv_3 over M2[c1, c2, c3]"))
    return rep


def verify_gr4() -> Report:
    C = Ctx(4)
    w1, w11, w12, w13 = C.w(1), C.w(1, 1), C.w(1, 2), C.w(1, 3)
    w2, w21, c1, c2, c3 = C.w(2), C.w(2, 1), C.c(1), C.c(2), C.c(3)
    rep = Report("Inv_4 relation on the 2-line")
    terms = [w1 * w13, w11 * w12, w1 * w12 * c1, w21 * c1, w2 * c3, w1 * w11 * c2]
    total = InvariantElement(4)
    for x in terms:
        total = total + x
    rep.check("w1 w1^(3) + w1^(1) w1^(2) + w1 w1^(2) c1 + w2^(1) c1 + w2 c3 + w1 w1^(1) c2 "
              "vanishes mod (rho, tau)", True, total.in_rho_tau_ideal())
    rep.note(f"computed (rho, tau) remainder: {_show(total) if total else '0'}")
    rep.check("each product is homogeneous of bidegree (8,5)", True,
              all(x.bidegree == (8, 5) for x in terms))
    line = rank_chart_inv(4, 18).line(2)
    rep.check("ranks along the 2-line", [1, 2, 5, 8, 14, 20, 30, 40, 55], line[:9])
    return rep


def verify_products(k_max: int = 5, e_max: int = 4) -> Report:
    """Squares of w_j, w_1 w_i, the w_1^(e) reduction, squares of w_1^(e), Newton."""
    rep = Report(f"product identities, k <= {k_max}, e <= {e_max}")
    bad_sq, bad_w1, bad_red, bad_sqe, bad_newton = [], [], [], [], []
    for k in range(1, k_max + 1):
        for j in range(1, k + 1):
            if square_w_e(j, 0, k) != predicted_square_w(j, k):
                bad_sq.append((k, j))
        for i in range(1, k + 1):
            if i % 2 == 0 and i == k:
                continue
            lhs = class_w(1, k) * class_w(i, k)
            if i % 2 == 0:
                rhs = class_wc(i - 1, 1, k) * TAU + class_w(i + 1, k)
            else:
                rhs = class_wc(i - 1, 1, k) * TAU + class_w(i, k) * RHO
            if lhs != rhs:
                bad_w1.append((k, i))
        for e in range(k, k + e_max + 1):
            if w1e_reduce(e, k) != class_w_e(1, e, k):
                bad_red.append((k, e))
        for e in range(0, e_max + 1):
            if square_w_e(1, e, k) != predicted_square_w1e(e, k):
                bad_sqe.append((k, e))
        for n in range(1, 9):
            if cpoly_eval(newton_power_sum(n, k), k) != power_sum_class(n, k):
                bad_newton.append((k, n))
    rep.check("w_j^2 = sum_s tau^(j-s) rho^s wc_{s,j-s}", [], bad_sq)
    rep.check("w1 w_(2m) = tau wc_(2m-1,1) + w_(2m+1); w1 w_(2m+1) = tau wc_(2m,1) + rho w_(2m+1)",
              [], bad_w1)
    rep.check("w1^(e) = sum_j w1^(e-j) c_j for e >= k", [], bad_red)
    rep.check("[w1^(e)]^2 = rho w1^(2e) + tau N_(2e+1)(c)", [], bad_sqe)
    rep.check("Newton polynomials equal [b1^n] for n <= 8", [], bad_newton)
    expected = parse_epoly("c1^5 + c1 c2^2 + c1^2 c3 + c1^3 c2 + c2 c3", 3, "c")
    got = newton_power_sum(5, 3)
    rep.check("N_5 for k = 3", render_cpoly(expected), render_cpoly(got))
    return rep


def verify_indecomposables(k: int, deg_max: int | None = None) -> Report:
    deg_max = deg_max if deg_max is not None else max(2 * k, 14)
    rep = Report(f"indecomposables of Inv_{k}, p <= {deg_max}")
    computed = indecomposable_ranks(k, deg_max)
    listed = RankChart.from_bidegrees([bidegree(p) for _, p in predicted_indecomposables(k)
                                       if sum(p) <= deg_max], k=k, p_max=deg_max)
    rule = predicted_indecomposable_chart(k, deg_max)
    rep.check("bigraded ranks of I/I^2 match the predicted generators",
              listed.entries(), computed.entries())
    rep.check("bigraded ranks match the odd/even degree rule truncated at weight <= k",
              rule.entries(), computed.entries())
    rep.check("total count 3k - ones(k)", 3 * k - bin(k).count("1"), computed.total())
    gens_ok = [name for name, p in predicted_indecomposables(k)
               if is_decomposable_mod_rho_tau(InvariantElement.basis(p, k), deg_max)]
    rep.check("no predicted generator is decomposable", [], gens_ok)
    wj = [j for j in range(1, k + 1)
          if is_decomposable_mod_rho_tau(class_w(j, k), deg_max) == (j & (j - 1) == 0)]
    rep.check("w_j is decomposable exactly when j is not a power of 2", [], wj)
    return rep


def stable_presentation_check(k: int, deg_max: int) -> Report:
    """Square-free monomials in the w_i^(e) times monomials in c span Inv_k mod (rho, tau)."""
    from itertools import combinations as combos

    rep = Report(f"square-free w-monomials span Inv_{k}, p <= {deg_max}")
    ws = []
    for i in range(1, k + 1):
        e = 0
        while i * (2 * e + 1) <= deg_max:
            ws.append(class_w_e(i, e, k))
            e += 1
    monos = [one(k)]
    for size in range(1, len(ws) + 1):
        found = False
        for combo in combos(ws, size):
            if sum(x.bidegree[0] for x in combo) > deg_max:
                continue
            found = True
            prod = one(k)
            for x in combo:
                prod = prod * x
            monos.append(prod)
        if not found:
            break
    cmons = _c_monomials(k, deg_max)
    space = decomposable_space(k, deg_max, True)
    from .gf2 import EchelonBasis

    spans: dict = {}
    cache = {exps: cpoly_eval(frozenset({exps}), k) for exps, _ in cmons}
    for m in monos:
        mp = m.bidegree[0] if m else 0
        for exps, (p, _) in cmons:
            if mp + p > deg_max:
                continue
            prod = m * cache[exps]
            reduced = prod.mod_rho_tau()
            if not reduced:
                continue
            grade, v = space.vector(reduced)
            spans.setdefault(grade, EchelonBasis()).add(v)
    short = sorted(g for g, ps in space.pieces.items()
                   if spans.get(g, EchelonBasis()).rank < len(ps))
    rep.check("every bigraded piece is spanned", [], short)
    return rep


def kronholm_combinatorial_check(k: int, p_max: int) -> Report:
    from .schubert import e1_rank_chart

    rep = Report(f"cell chart vs invariant chart, k={k}, p <= {p_max}")
    cells = e1_rank_chart(k, p_max)
    inv = rank_chart_inv(k, p_max)
    cs, ivs = cells.column_sums(), inv.column_sums()
    bad_cols = [p for p in range(p_max + 1) if cs.get(p, 0) != ivs.get(p, 0)]
    rep.check("column sums agree", [], bad_cols)
    # the diagonal q - p = -c starts at p = 2c and, for cells, ends by
    # p = 2c + C(k+1, 2); widen both charts so every diagonal meeting the
    # window is summed in full
    c_max = p_max // 2
    reach = 2 * c_max + comb(k + 1, 2)
    cd = e1_rank_chart(k, reach).diagonal_sums()
    idg = rank_chart_inv(k, reach).diagonal_sums()
    bad_diag = [c for c in range(c_max + 1) if cd.get(-c, 0) != idg.get(-c, 0)]
    rep.check(f"diagonal sums agree for c <= {c_max}", [], bad_diag)
    bad_dual = []
    for p in range(0, p_max + 1):
        for r in range(0, k + 1):
            a, b = (2 * p + r, p + r), (2 * p + k - r, p + k - r)
            if max(a[0], b[0]) <= p_max and inv[a] != inv[b]:
                bad_dual.append((p, r))
    rep.check("rank^(2p+r,p+r) = rank^(2p+k-r,p+k-r)", [], bad_dual)
    bad_line = []
    for p in range(0, (p_max - 1) // 2 + 1):
        lhs = inv[(2 * p + 1, p + 1)]
        rhs = sum(inv[(2 * p - 2 * i, p - i)] for i in range(k))
        if lhs != rhs:
            bad_line.append(p)
    rep.check("1-line: rank^(2p+1,p+1) = sum_i rank^(2p-2i,p-i)", [], bad_line)
    bad_bounds = []
    for (a, b), _ in inv.counts.items():
        upper = a if a <= k else a / 2 + k / 2
        if not (a / 2 <= b <= upper):
            bad_bounds.append((a, b))
    rep.check("support inside y = x, y = x/2, y = x/2 + k/2", [], bad_bounds)
    return rep

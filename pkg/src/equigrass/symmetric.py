"""Symmetric polynomials over F2 in k variables.

Used for the forgetful map, where the target is F2[a_1..a_k]^{S_k}, the
polynomial ring on the elementary symmetric functions.  A symmetric
polynomial is kept in the monomial symmetric basis: a set of partitions
(ascending, length k), each standing for m_lambda.  A polynomial in the
elementary functions is a set of exponent tuples (e_1 .. e_k).
"""

from __future__ import annotations

from functools import lru_cache

from ._pykernels import distinct_permutations
from .partitions import orbit_size

EPoly = frozenset  # frozenset[tuple[int, ...]]


@lru_cache(maxsize=None)
def monomial_product(lam: tuple, mu: tuple) -> frozenset:
    """m_lam * m_mu over F2, in the monomial basis (no relations)."""
    counts: dict = {}
    for v in distinct_permutations(mu):
        key = tuple(sorted(x + y for x, y in zip(lam, v)))
        counts[key] = counts.get(key, 0) + 1
    n_lam = orbit_size(lam)
    out = set()
    for nu, c in counts.items():
        total = c * n_lam
        assert total % orbit_size(nu) == 0
        if (total // orbit_size(nu)) & 1:
            out.add(nu)
    return frozenset(out)


def sym_mul(x: frozenset, y: frozenset) -> frozenset:
    acc: set = set()
    for lam in x:
        for mu in y:
            acc ^= monomial_product(lam, mu)
    return frozenset(acc)


@lru_cache(maxsize=None)
def elementary_monomial(exps: tuple) -> frozenset:
    """The product prod e_i^exps[i] in the monomial basis."""
    k = len(exps)
    out = frozenset({(0,) * k})
    for i, e in enumerate(exps, start=1):
        e_i = frozenset({(0,) * (k - i) + (1,) * i})
        for _ in range(e):
            out = sym_mul(out, e_i)
    return out


def to_elementary(x: frozenset, k: int) -> EPoly:
    """Rewrite a symmetric polynomial in terms of e_1..e_k.

    Repeatedly strips the lex-largest monomial m_lam using
    e_1^(l1-l2) e_2^(l2-l3) ... e_k^lk, whose leading term is m_lam.
    """
    rest = set(x)
    out = set()
    while rest:
        lead = max(rest, key=lambda p: tuple(reversed(p)))
        desc = tuple(reversed(lead))
        exps = tuple(desc[i] - (desc[i + 1] if i + 1 < k else 0) for i in range(k))
        out ^= {exps}
        rest ^= elementary_monomial(exps)
    return frozenset(out)


def from_elementary(f: EPoly) -> frozenset:
    acc: set = set()
    for exps in f:
        acc ^= elementary_monomial(exps)
    return frozenset(acc)


def epoly_mul(f: EPoly, g: EPoly) -> EPoly:
    acc: set = set()
    for x in f:
        for y in g:
            acc ^= {tuple(a + b for a, b in zip(x, y))}
    return frozenset(acc)


def render_epoly(f: EPoly, name: str = "w") -> str:
    if not f:
        return "0"
    terms = []
    for exps in sorted(f, key=lambda e: (-sum((i + 1) * x for i, x in enumerate(e)), tuple(-x for x in e))):
        parts = []
        for i, x in enumerate(exps, start=1):
            if x == 1:
                parts.append(f"{name}{i}")
            elif x > 1:
                parts.append(f"{name}{i}^{x}")
        terms.append(" ".join(parts) if parts else "1")
    return " + ".join(terms)


def parse_epoly(src: str, k: int, name: str = "w") -> EPoly:
    """Read back ``render_epoly`` output, e.g. ``w1 w2 + w1^3``."""
    src = src.strip()
    if src == "0":
        return frozenset()
    acc: set = set()
    for term in src.split("+"):
        exps = [0] * k
        for tok in term.split():
            if tok == "1":
                continue
            base, _, power = tok.partition("^")
            if not base.startswith(name):
                raise ValueError(f"bad factor {tok!r}")
            exps[int(base[len(name):]) - 1] += int(power) if power else 1
        acc ^= {tuple(exps)}
    return frozenset(acc)


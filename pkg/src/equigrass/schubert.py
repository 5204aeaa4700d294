"""Equivariant Schubert cells of Gr_k(U) and their bidegrees.

Three encodings of a cell are used interchangeably:

* Schubert symbol ``sigma``: weakly increasing, ``sigma_i = a_i - i``;
* a-sequence ``a``: strictly increasing positive integers;
* star pattern: the set of boxes ``a_i`` (1-indexed) holding a ``*``.

Boxes alternate ``+ - + - ...`` starting with ``+`` in box 1.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator

from . import _kernels
from .charts import RankChart
from .partitions import Partition, enumerate_partitions

Symbol = tuple[int, ...]
ASeq = tuple[int, ...]


def symbol_to_aseq(sigma: Iterable[int]) -> ASeq:
    sigma = tuple(sigma)
    if any(x < 0 for x in sigma) or list(sigma) != sorted(sigma):
        raise ValueError(f"{sigma} is not a Schubert symbol")
    return tuple(s + i for i, s in enumerate(sigma, start=1))


def aseq_to_symbol(a: Iterable[int]) -> Symbol:
    a = tuple(a)
    if any(x < 1 for x in a) or any(x >= y for x, y in zip(a, a[1:])):
        raise ValueError(f"{a} is not an a-sequence")
    return tuple(x - i for i, x in enumerate(a, start=1))


def render_pattern(a: ASeq, length: int | None = None) -> str:
    """Signs and stars, e.g. ``+*+-*-+*`` for (2,5,8)."""
    length = length or (max(a) if a else 0)
    stars = set(a)
    return "".join("*" if m in stars else ("+" if m % 2 else "-")
                   for m in range(1, length + 1))


def cell_bidegree(sigma: Iterable[int]) -> tuple[int, int]:
    """(dimension, cell-weight) of the cell with Schubert symbol ``sigma``."""
    return _kernels.cell_bidegree(symbol_to_aseq(sigma))


def aseq_bidegree(a: ASeq) -> tuple[int, int]:
    return _kernels.cell_bidegree(tuple(a))


def matrix_orbit_bidegree(a: ASeq) -> tuple[int, int]:
    """Cell bidegree from the matrix model of the open cell.

    Row i of the standard-form matrix has a pivot 1 in column a_i, free
    entries in earlier columns that are not pivot columns, and zeros
    elsewhere.  The involution negates every even-numbered column; the
    result is put back in standard form by rescaling each row so its pivot
    is 1 again.  The weight is the number of free entries whose sign flips.
    """
    a = tuple(a)
    k = len(a)
    ncols = max(a) if a else 0
    pivots = set(a)
    # entries: None for fixed 0, 1 for the pivot, or a free-variable label
    rows = []
    for i, ai in enumerate(a):
        row = []
        for c in range(1, ncols + 1):
            if c == ai:
                row.append(("one", 1))
            elif c < ai and c not in pivots:
                row.append(("var", (i, c)))
            else:
                row.append(("zero", 0))
        rows.append(row)
    col_sign = [1 if c % 2 else -1 for c in range(1, ncols + 1)]
    acted = [[(kind, val, col_sign[c]) for c, (kind, val) in enumerate(row)] for row in rows]
    dim = 0
    flips = 0
    for i in range(k):
        pivot_sign = acted[i][a[i] - 1][2]
        for kind, _, sign in acted[i]:
            if kind == "var":
                dim += 1
                if sign * pivot_sign < 0:
                    flips += 1
    return dim, flips


def _symbols(p: int, k: int) -> Iterator[Symbol]:
    yield from enumerate_partitions(p, k)


def enumerate_cells(k: int, p_max: int | None = None,
                    ambient: int | None = None) -> list[tuple[Symbol, tuple[int, int]]]:
    """All cells with dimension <= ``p_max``, or all with a_k <= ``ambient``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if (p_max is None) == (ambient is None):
        raise ValueError("give exactly one of p_max and ambient")
    out = []
    if ambient is not None:
        if ambient < k:
            return []
        # a_k <= N  <=>  sigma_k <= N - k
        top = ambient - k
        for p in range(top * k + 1):
            for s in _symbols(p, k):
                if s[-1] <= top:
                    out.append((s, cell_bidegree(s)))
    else:
        # every cell of dimension <= p_max has a_k <= p_max + k
        for p in range(p_max + 1):
            for s in _symbols(p, k):
                out.append((s, cell_bidegree(s)))
    return out


def e1_rank_chart(k: int, p_max: int) -> RankChart:
    """Number of Schubert cells in each bidegree, dimension <= ``p_max``."""
    chart = RankChart.from_bidegrees((bd for _, bd in enumerate_cells(k, p_max=p_max)),
                                     k=k, p_max=p_max)
    return chart


def pattern_successors(a: ASeq) -> set[ASeq]:
    """Move one star two boxes right, onto an empty box."""
    stars = set(a)
    out = set()
    for x in a:
        if x + 2 not in stars:
            out.add(tuple(sorted((stars - {x}) | {x + 2})))
    return out


def pattern_predecessors(a: ASeq) -> set[ASeq]:
    stars = set(a)
    out = set()
    for x in a:
        if x - 2 >= 1 and x - 2 not in stars:
            out.add(tuple(sorted((stars - {x}) | {x - 2})))
    return out


def is_minimal_pattern(a: ASeq) -> bool:
    return not pattern_predecessors(a)


def minimal_patterns(k: int) -> list[ASeq]:
    """The k+1 minimal patterns, in increasing dimension.

    The first blank box follows star number j (j = 0..k); after it the
    remaining stars sit on every other box.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for j in range(k, -1, -1):
        head = list(range(1, j + 1))
        tail = [j + 2 * t for t in range(1, k - j + 1)]
        out.append(tuple(head + tail))
    return out


def partition_to_pattern(p: Partition) -> ASeq:
    """Even parts fill even boxes, odd parts fill odd boxes.

    For the sorted even parts u_1 <= u_2 <= ... the i-th even star lands in
    box u_i + 2i; for the sorted odd parts v_1 <= ... the i-th odd star
    lands in box v_i + 2i - 2.
    """
    evens = sorted(x for x in p if x % 2 == 0)
    odds = sorted(x for x in p if x % 2)
    boxes = [u + 2 * i for i, u in enumerate(evens, start=1)]
    boxes += [v + 2 * i - 2 for i, v in enumerate(odds, start=1)]
    return tuple(sorted(boxes))


def pattern_to_partition(a: ASeq) -> Partition:
    evens = sorted(x for x in a if x % 2 == 0)
    odds = sorted(x for x in a if x % 2)
    parts = [x - 2 * i for i, x in enumerate(evens, start=1)]
    parts += [x - 2 * i + 2 for i, x in enumerate(odds, start=1)]
    return tuple(sorted(parts))


def gamma(i: int, k: int) -> int:
    if not 1 <= i <= k + 1:
        raise ValueError(f"gamma index {i} outside 1..{k + 1}")
    if (k - i) % 2 == 0:
        return (k + i) // 2
    return (k + 1 - i) // 2


def ray_starts(k: int) -> list[tuple[int, int]]:
    return [(comb(i, 2), comb(i, 2)) for i in range(1, k + 2)]


def parse_pattern(src: str) -> ASeq:
    """Accept star boxes as ``{1,2,4}`` / ``1,2,4`` or a pattern like ``**+-*``."""
    body = src.strip()
    if body and set(body) <= set("*+-_ "):
        return tuple(i for i, ch in enumerate(body.replace(" ", ""), start=1) if ch == "*")
    body = body.strip("{}[]() ")
    a = tuple(sorted(int(x) for x in body.replace(",", " ").split()))
    aseq_to_symbol(a)
    return a

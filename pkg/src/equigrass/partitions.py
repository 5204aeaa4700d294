"""Partition combinatorics for the free basis of Inv_k.

A partition is a weakly increasing tuple of exactly ``k`` nonnegative
integers (zeros are kept, so ``k`` is the tuple length).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]

# exhaustive counting is used up to this n, the recurrence beyond it
ENUMERATION_LIMIT = 30


def make_partition(parts: Iterable[int], k: int | None = None) -> Partition:
    """Sort ``parts`` ascending, left-padding with zeros up to length ``k``."""
    parts = sorted(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if k is not None:
        if len(parts) > k:
            extra = parts[: len(parts) - k]
            if any(extra):
                raise ValueError(f"{parts} has more than {k} nonzero parts")
            parts = parts[len(parts) - k:]
        parts = [0] * (k - len(parts)) + parts
    return tuple(parts)


def odd_count(p: Partition) -> int:
    return sum(x & 1 for x in p)


def weight(p: Partition) -> int:
    """Sum of the ceilings of the half-parts."""
    w = sum((x + 1) // 2 for x in p)
    assert 2 * w == sum(p) + odd_count(p)
    return w


def bidegree(p: Partition) -> tuple[int, int]:
    return sum(p), weight(p)


def enumerate_partitions(n: int, k: int) -> list[Partition]:
    """All partitions of ``n`` into exactly ``k`` nonnegative parts."""
    if n < 0 or k < 0:
        return []
    return list(_partitions(n, k, 0))


def _partitions(n: int, k: int, lo: int) -> Iterator[Partition]:
    # parts >= lo, ascending
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(lo, n // k + 1):
        for rest in _partitions(n - first, k - 1, first):
            yield (first,) + rest


def count_prt_enum(n: int, k: int, j: int) -> int:
    """prt(n, k, j) by listing every partition."""
    return sum(1 for p in enumerate_partitions(n, k) if odd_count(p) == j)


@lru_cache(maxsize=None)
def _at_most(s: int, r: int) -> int:
    """Partitions of s into at most r parts."""
    if s == 0:
        return 1
    if r == 0 or s < 0:
        return 0
    # either fewer than r parts, or subtract 1 from each of r parts
    return _at_most(s, r - 1) + _at_most(s - r, r)


def count_prt_dp(n: int, k: int, j: int) -> int:
    """prt(n, k, j) by splitting off the odd parts.

    Odd parts are 2x+1 and even parts 2y, so (n - j)/2 is shared between a
    multiset of j values x and a multiset of k - j values y.
    """
    if n < 0 or j < 0 or j > k or (n - j) % 2:
        return 0
    m = (n - j) // 2
    return sum(_at_most(s, j) * _at_most(m - s, k - j) for s in range(m + 1))


def count_prt(n: int, k: int, j: int) -> int:
    """Number of partitions of n into k nonnegative parts, exactly j odd."""
    if n < 0 or k < 0 or j < 0:
        return 0
    if n <= ENUMERATION_LIMIT:
        return count_prt_enum(n, k, j)
    return count_prt_dp(n, k, j)


def successors(p: Partition) -> set[Partition]:
    """Partitions obtained by adding 2 to one part."""
    out = set()
    for i in range(len(p)):
        q = list(p)
        q[i] += 2
        out.add(tuple(sorted(q)))
    return out


def minimal_root(p: Partition) -> Partition:
    """The unique minimal partition that ``p`` descends from."""
    return tuple(sorted(x & 1 for x in p))


def is_minimal(p: Partition) -> bool:
    return all(x <= 1 for x in p)


def minimal_partitions(k: int) -> list[Partition]:
    return [tuple([0] * (k - j) + [1] * j) for j in range(k + 1)]


def duality_bijection(p: Partition) -> Partition:
    """Lower each odd part by one and raise each even part by one."""
    return tuple(sorted(x - 1 if x & 1 else x + 1 for x in p))


def parse_partition(src: str, k: int | None = None) -> Partition:
    """Read ``[0,1,3]``, ``0,1,3`` or the digit-string form ``013``."""
    body = src.strip().strip("[]() ")
    if not body:
        parts: list[int] = []
    elif "," in body or " " in body:
        parts = [int(x) for x in body.replace(",", " ").split()]
    else:
        parts = [int(ch) for ch in body]
    return make_partition(parts, k)


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def orbit_size(p: Partition) -> int:
    """Number of distinct rearrangements of ``p``."""
    return _orbit_size(tuple(sorted(p)))


@lru_cache(maxsize=None)
def _orbit_size(p: Partition) -> int:
    from math import factorial

    n = factorial(len(p))
    run = 1
    for i in range(1, len(p) + 1):
        if i < len(p) and p[i] == p[i - 1]:
            run += 1
        else:
            n //= factorial(run)
            run = 1
    return n

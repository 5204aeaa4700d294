"""Pure-Python versions of the hot loops.

Monomials in T_k (and in the exterior/deRham ring) are encoded by their
per-index pure degrees: index i carries ``b_i^r`` for degree 2r and
``a_i b_i^r`` for degree 2r+1.  An orbit sum is then a sorted tuple.
"""

from __future__ import annotations


def distinct_permutations(parts):
    """Yield each distinct rearrangement of ``parts`` once (lexicographic)."""
    seq = sorted(parts)
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def orbit_product_counts(lam, mu, derham=False):
    """Integer counts behind the product of orbit sums [lam]*[mu].

    ``lam`` is held fixed and ``mu`` runs over its rearrangements.  At an
    index where both pure degrees are odd the factor is a^2 b^(...), which
    rewrites to rho*(degree x+y-1) + tau*(degree x+y); in the deRham ring it
    is zero.  Returns ``{sorted target tuple: count}``.
    """
    k = len(lam)
    counts = {}
    for v in distinct_permutations(mu):
        base = [lam[i] + v[i] for i in range(k)]
        both = [i for i in range(k) if lam[i] & 1 and v[i] & 1]
        if not both:
            key = tuple(sorted(base))
            counts[key] = counts.get(key, 0) + 1
            continue
        if derham:
            continue
        for mask in range(1 << len(both)):
            t = list(base)
            for bit, i in enumerate(both):
                if (mask >> bit) & 1:
                    t[i] -= 1
            key = tuple(sorted(t))
            counts[key] = counts.get(key, 0) + 1
    return counts


def cell_bidegree(a_seq):
    """(dimension, cell-weight) of the cell with the given a-sequence.

    Box m carries + when m is odd and - when m is even; stars erase signs.
    """
    stars = set(a_seq)
    dim = 0
    wt = 0
    plus = 0
    minus = 0
    prev = 0
    for i, a in enumerate(sorted(a_seq)):
        for m in range(prev + 1, a):
            if m not in stars:
                if m & 1:
                    plus += 1
                else:
                    minus += 1
        prev = a
        dim += a - 1 - i
        wt += plus if a % 2 == 0 else minus
    return dim, wt

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_pykernels``.

Same encoding and same return values; see that module for the algebra.
"""

cdef enum:
    MAXK = 32


cdef inline void _isort(int* a, int n) noexcept:
    cdef int i, j, x
    for i in range(1, n):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


cdef inline bint _next_perm(int* a, int n) noexcept:
    cdef int i = n - 2, j, t, lo, hi
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    lo = i + 1
    hi = n - 1
    while lo < hi:
        t = a[lo]; a[lo] = a[hi]; a[hi] = t
        lo += 1
        hi -= 1
    return True


cdef inline tuple _key(int* a, int n):
    return tuple([a[i] for i in range(n)])


def orbit_product_counts(lam, mu, bint derham=False):
    cdef int k = len(lam)
    if k > MAXK:
        raise ValueError("too many indices for the compiled kernel")
    cdef int L[MAXK]
    cdef int V[MAXK]
    cdef int B[MAXK]
    cdef int T[MAXK]
    cdef int both[MAXK]
    cdef int i, nb, bit
    cdef long mask, nmask
    cdef dict counts = {}
    for i in range(k):
        L[i] = lam[i]
        V[i] = mu[i]
    _isort(V, k)
    while True:
        nb = 0
        for i in range(k):
            B[i] = L[i] + V[i]
            if (L[i] & 1) and (V[i] & 1):
                both[nb] = i
                nb += 1
        if nb == 0:
            for i in range(k):
                T[i] = B[i]
            _isort(T, k)
            key = _key(T, k)
            counts[key] = counts.get(key, 0) + 1
        elif not derham:
            nmask = 1 << nb
            for mask in range(nmask):
                for i in range(k):
                    T[i] = B[i]
                for bit in range(nb):
                    if (mask >> bit) & 1:
                        T[both[bit]] -= 1
                _isort(T, k)
                key = _key(T, k)
                counts[key] = counts.get(key, 0) + 1
        if not _next_perm(V, k):
            break
    return counts


def cell_bidegree(a_seq):
    cdef int k = len(a_seq)
    cdef int i, a, prev = 0, plus = 0, minus = 0, gap
    cdef long dim = 0, wt = 0
    cdef int A[MAXK]
    if k > MAXK:
        raise ValueError("too many indices for the compiled kernel")
    for i in range(k):
        A[i] = a_seq[i]
    _isort(A, k)
    for i in range(k):
        a = A[i]
        # boxes prev+1 .. a-1 are empty; odd ones carry +
        gap = a // 2 - (prev + 1) // 2
        plus += gap
        minus += a - prev - 1 - gap
        prev = a
        dim += a - 1 - i
        if a % 2 == 0:
            wt += plus
        else:
            wt += minus
    return int(dim), int(wt)

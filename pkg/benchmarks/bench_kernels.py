"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, so the result does not depend on
EQUIGRASS_PURE.  The outputs are compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from equigrass import _pykernels
from equigrass.partitions import enumerate_partitions

try:
    from equigrass import _ckernels
except ImportError:
    _ckernels = None


def product_workload(k: int, n: int) -> list[tuple]:
    parts = [p for d in range(1, n + 1) for p in enumerate_partitions(d, k)]
    return [(lam, mu) for lam in parts[::3] for mu in parts[::5]]


def cell_workload(k: int, p_max: int) -> list[tuple]:
    out = []
    for p in range(p_max + 1):
        for s in enumerate_partitions(p, k):
            out.append(tuple(x + i for i, x in enumerate(s, start=1)))
    return out


def run_products(mod, pairs, derham=False):
    for lam, mu in pairs:
        mod.orbit_product_counts(lam, mu, derham)


def run_cells(mod, seqs):
    for a in seqs:
        mod.cell_bidegree(a)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available", file=sys.stderr)
        return 1

    cases = [
        ("orbit products, k=4, deg<=10", run_products, product_workload(4, 10), {}),
        ("orbit products, k=5, deg<=9", run_products, product_workload(5, 9), {}),
        ("deRham products, k=5, deg<=9", run_products, product_workload(5, 9), {"derham": True}),
        ("cell bidegrees, k=6, p<=24", run_cells, cell_workload(6, 24), {}),
    ]
    for _, fn, work, kw in cases:
        if fn is run_products:
            for lam, mu in work:
                assert _pykernels.orbit_product_counts(lam, mu, **kw) == \
                    _ckernels.orbit_product_counts(lam, mu, **kw)
        else:
            for a in work:
                assert _pykernels.cell_bidegree(a) == _ckernels.cell_bidegree(a)

    print(f"{'workload':34} {'items':>7} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, fn, work, kw in cases:
        py = min(timeit.repeat(lambda: fn(_pykernels, work, **kw), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn(_ckernels, work, **kw), number=1, repeat=args.repeat))
        print(f"{label:34} {len(work):>7} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

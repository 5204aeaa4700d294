"""Verification suites grouped by topic, plus a runner for all of them.

Every suite returns a ``Report``.  ``run_suites`` fans independent suites
out over a process pool capped by ``EQUIGRASS_THREADS``; the reports come
back in the order they were requested.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Callable

from . import reference as ref
from .charts import RankChart
from .derham import appendix_report
from .invariants import (InvariantElement, expand, kronholm_combinatorial_check, rank_chart_inv,
                         rank_chart_inv_enum, slow_mul, to_basis, forgetful, verify_gr4,
                         verify_indecomposables, verify_presentation, verify_products,
                         stable_presentation_check)
from .m2 import rho_tau
from .partitions import (count_prt, count_prt_dp, count_prt_enum, duality_bijection,
                         enumerate_partitions, is_minimal, minimal_partitions, minimal_root,
                         successors, weight)
from .report import Report
from .schubert import (aseq_bidegree, cell_bidegree, e1_rank_chart,
                       enumerate_cells, gamma, matrix_orbit_bidegree, minimal_patterns,
                       partition_to_pattern, pattern_successors, pattern_to_partition,
                       ray_starts, symbol_to_aseq)
from .symmetric import epoly_mul


def _window(chart: RankChart, p_max: int, q_max: int) -> dict:
    return {pq: c for pq, c in chart.counts.items() if pq[0] <= p_max and pq[1] <= q_max}


def _diff(expected: dict, computed: dict) -> list:
    keys = sorted(set(expected) | set(computed))
    return [(pq, expected.get(pq, 0), computed.get(pq, 0)) for pq in keys
            if expected.get(pq, 0) != computed.get(pq, 0)]


# -- charts ---------------------------------------------------------------------

def verify_charts() -> Report:
    rep = Report("rank charts against the reference tables")
    inv4 = rank_chart_inv(4, ref.INV4_WINDOW)
    rep.check("Inv_4 chart, every box in the printed window (differences)", [],
              _diff(ref.INV4_CHART, _window(inv4, ref.INV4_WINDOW, ref.INV4_QWINDOW)))
    for pq in [(5, 3), (8, 5), (13, 8), (14, 8), (6, 4), (9, 6)]:
        rep.check(f"Inv_4 rank at {pq}", ref.INV4_CHART[pq], inv4[pq])
    inv5 = rank_chart_inv(5, ref.INV5_WINDOW)
    rep.check("Inv_5 chart, every box in the printed window (differences)", [],
              _diff(ref.INV5_CHART, _window(inv5, ref.INV5_WINDOW, ref.INV5_QWINDOW)))
    for pq in [(8, 5), (12, 7)]:
        rep.check(f"Inv_5 rank at {pq}", ref.INV5_CHART[pq], inv5[pq])
    rep.check("Inv_k chart by counting = chart by enumeration, k <= 5, p <= 16", True,
              all(rank_chart_inv(k, 16) == rank_chart_inv_enum(k, 16) for k in range(1, 6)))
    rep.check("Inv_1 chart up to p = 7", ref.GR1_CELLS,
              [pq for pq, _ in sorted(rank_chart_inv(1, 7).counts.items())])

    gr5 = e1_rank_chart(5, ref.GR5_CELLS_WINDOW)
    rep.check("Gr_5 cell chart, every box in the printed window (differences)", [],
              _diff(ref.GR5_CELLS_CHART,
                    _window(gr5, ref.GR5_CELLS_WINDOW, ref.GR5_CELLS_QWINDOW)))
    for pq in [(8, 4), (12, 6), (20, 10)]:
        rep.check(f"Gr_5 cells at {pq}", ref.GR5_CELLS_CHART[pq], gr5[pq])
    starts = ray_starts(5)
    rep.check("Gr_5 ray starts at (C(i,2), C(i,2)), i = 1..6",
              [(comb(i, 2), comb(i, 2)) for i in range(1, 7)], starts)
    rep.check("one cell at each ray start", [1] * 6,
              [e1_rank_chart(5, 15)[pq] for pq in starts])
    rep.check("ray from (3,3): (3,3), (5,4), (7,5)", [1, 2, 4],
              [gr5[pq] for pq in [(3, 3), (5, 4), (7, 5)]])
    cells = enumerate_cells(2, ambient=6)
    rep.check("Gr_2(U^6) has 15 cells", 15, len(cells))
    rep.check("Gr_2(U^6) bidegree multiset", sorted(Counter(ref.GR2_U6_CELLS).elements()),
              sorted(bd for _, bd in cells))
    rep.check("Gr_1 cells of dimension <= 7", ref.GR1_CELLS,
              [bd for _, bd in enumerate_cells(1, p_max=7)])
    rep.check("cell (1,3,5) has bidegree (9,5)", (9, 5), cell_bidegree((1, 3, 5)))
    rep.check("cell (4,4) has bidegree (8,4)", (8, 4), cell_bidegree((4, 4)))
    return rep


# -- Schubert cells ---------------------------------------------------------------

def verify_cells(k_max: int = 6, r_max: int = 10) -> Report:
    rep = Report(f"Schubert cell structure, k <= {k_max}, r <= {r_max}")
    bad_lines = []
    for k in range(1, k_max + 1):
        top = comb(k + 1, 2)
        chart = e1_rank_chart(k, top + 2 * r_max)
        triangular = {comb(i, 2): i for i in range(1, k + 2)}
        for j in range(top + 1):
            for r in range(r_max + 1):
                got = chart[(j + 2 * r, j + r)]
                if j in triangular:
                    g = gamma(triangular[j], k)
                    want = count_prt(2 * r + g, k, g)
                else:
                    want = 0
                if got != want:
                    bad_lines.append((k, j, r, want, got))
    rep.check("rank^(j+2r, j+r) = prt(2r + gamma_i, k, gamma_i) at j = C(i,2), else 0", [],
              bad_lines)
    rep.check("gamma_(k+1), gamma_k, ... for k = 5", [0, 5, 1, 4, 2, 3],
              [gamma(i, 5) for i in range(6, 0, -1)])

    bad_min = []
    for k in range(1, k_max + 1):
        mins = minimal_patterns(k)
        degs = sorted(aseq_bidegree(a) for a in mins)
        if len(mins) != k + 1 or degs != ray_starts(k):
            bad_min.append(k)
    rep.check("k+1 minimal patterns with bidegrees (C(i,2), C(i,2))", [], bad_min)
    rep.check("successors of 123", [(1, 2, 5), (1, 3, 4)], sorted(pattern_successors((1, 2, 3))))

    bad_shift, bad_cols = [], []
    for k in range(1, 5):
        for s, (p, q) in enumerate_cells(k, p_max=12):
            a = symbol_to_aseq(s)
            if any(aseq_bidegree(b) != (p + 2, q + 1) for b in pattern_successors(a)):
                bad_shift.append(s)
        chart = e1_rank_chart(k, 16)
        bad_cols += [(k, p) for p in range(17)
                     if chart.column_sum(p) != len(enumerate_partitions(p, k))]
    rep.check("each successor shifts bidegree by (2,1)", [], bad_shift)
    rep.check("column sums = number of partitions of p into <= k parts", [], bad_cols)

    bad_matrix = []
    for k in range(1, 5):
        for s, bd in enumerate_cells(k, p_max=10):
            if matrix_orbit_bidegree(symbol_to_aseq(s)) != bd:
                bad_matrix.append(s)
    rep.check("sign counting = row-reduction sign flips, k <= 4, p <= 10", [], bad_matrix)

    rep.check("[0,0,1,2,3] -> stars at 1,2,4,5,8", (1, 2, 4, 5, 8),
              partition_to_pattern((0, 0, 1, 2, 3)))
    rep.check("stars at 1,4,6,7,8,12,14,16 -> [1,2,2,2,4,4,4,5]", (1, 2, 2, 2, 4, 4, 4, 5),
              pattern_to_partition((1, 4, 6, 7, 8, 12, 14, 16)))
    return rep


def _patterns(k: int, dim_max: int):
    for p in range(dim_max + 1):
        for s in enumerate_partitions(p, k):
            yield symbol_to_aseq(s)


def verify_bijection(k_max: int = 5, dim_max: int = 12) -> Report:
    rep = Report(f"partition <-> pattern bijection, k <= {k_max}, dimension <= {dim_max}")
    bad_fwd, bad_back, bad_succ, bad_pred = [], [], [], []
    for k in range(1, k_max + 1):
        for n in range(dim_max + 1):
            for p in enumerate_partitions(n, k):
                a = partition_to_pattern(p)
                if pattern_to_partition(a) != p:
                    bad_fwd.append(p)
                if {partition_to_pattern(s) for s in successors(p)} != pattern_successors(a):
                    bad_succ.append(p)
        for a in _patterns(k, dim_max):
            p = pattern_to_partition(a)
            if partition_to_pattern(p) != a:
                bad_back.append(a)
            if {pattern_to_partition(b) for b in pattern_successors(a)} != successors(p):
                bad_pred.append(a)
    rep.check("pattern_to_partition(partition_to_pattern(p)) = p", [], bad_fwd)
    rep.check("partition_to_pattern(pattern_to_partition(a)) = a", [], bad_back)
    rep.check("successors commute, partition side", [], bad_succ)
    rep.check("successors commute, pattern side", [], bad_pred)
    rep.check("all-zero partition -> even boxes", (2, 4, 6, 8), partition_to_pattern((0,) * 4))
    return rep


# -- partitions and duality ----------------------------------------------------------

def verify_duality(k: int, p_max: int) -> Report:
    rep = Report(f"partition counts and duality, k <= {k}, n <= {p_max}")
    bad_dual, bad_impl, bad_bij = [], [], []
    for kk in range(0, k + 1):
        for n in range(p_max + 1):
            for j in range(kk + 1):
                if count_prt(n, kk, j) != count_prt(n + kk - 2 * j, kk, kk - j):
                    bad_dual.append((n, kk, j))
                if n <= 30 and count_prt_enum(n, kk, j) != count_prt_dp(n, kk, j):
                    bad_impl.append((n, kk, j))
    for kk in range(1, k + 1):
        for n in range(p_max + 1):
            for p in enumerate_partitions(n, kk):
                j = sum(x & 1 for x in p)
                d = duality_bijection(p)
                if (sum(d), sum(x & 1 for x in d)) != (n + kk - 2 * j, kk - j) or \
                        duality_bijection(d) != p:
                    bad_bij.append(p)
    rep.check("prt(n,k,j) = prt(n + k - 2j, k, k - j)", [], bad_dual)
    rep.check("enumeration and recurrence agree", [], bad_impl)
    rep.check("odd/even swap is an involution between the two counting sets", [], bad_bij)
    rep.check("prt(8,5,4)", 4, count_prt(8, 5, 4))
    rep.check("[0,1,1,3,3] -> [0,0,1,2,2]", (0, 0, 1, 2, 2), duality_bijection((0, 1, 1, 3, 3)))

    bad_cor, bad_succ, bad_min, bad_root = [], [], [], []
    for kk in range(1, k + 1):
        inv = rank_chart_inv(kk, p_max + kk)
        for p in range(p_max // 2 + 1):
            for r in range(kk + 1):
                if inv[(2 * p + r, p + r)] != inv[(2 * p + kk - r, p + kk - r)]:
                    bad_cor.append((kk, p, r))
        for n in range(min(p_max, 12) + 1):
            for p in enumerate_partitions(n, kk):
                if any(sum(s) != n + 2 or weight(s) != weight(p) + 1 for s in successors(p)):
                    bad_succ.append(p)
                root = minimal_root(p)
                if not is_minimal(root) or minimal_root(root) != root:
                    bad_root.append(p)
        brute = sorted(p for n in range(kk + 1) for p in enumerate_partitions(n, kk)
                       if is_minimal(p))
        if brute != sorted(minimal_partitions(kk)) or len(brute) != kk + 1:
            bad_min.append(kk)
    rep.check("rank^(2p+r,p+r) = rank^(2p+k-r,p+k-r)", [], bad_cor)
    rep.check("successors add (2,1) to the bidegree", [], bad_succ)
    rep.check("minimal roots are minimal and fixed", [], bad_root)
    rep.check("exactly k+1 minimal partitions", [], bad_min)
    return rep


# -- random properties ----------------------------------------------------------------

def random_homogeneous(rng: random.Random, k: int, deg_max: int) -> InvariantElement:
    """A random homogeneous element with positive-cone coefficients."""
    while True:
        p = rng.randint(0, deg_max)
        q = rng.randint((p + 1) // 2, p)
        terms = {}
        for n in range(p + 1):
            for lam in enumerate_partitions(n, k):
                s = p - n
                t = q - weight(lam) - s
                if t >= 0 and rng.random() < 0.35:
                    terms[lam] = rho_tau(s, t)
        x = InvariantElement(k, terms)
        if x:
            return x


def verify_properties(samples: int = 200, k_max: int = 4, deg_max: int = 10,
                      seed: int = 0) -> Report:
    rep = Report(f"ring axioms on {samples} random triples, k <= {k_max}, degree <= {deg_max}")
    rng = random.Random(seed)
    bad_comm, bad_assoc, bad_deg, bad_unit, bad_trip, bad_slow, bad_forget = ([] for _ in range(7))
    for i in range(samples):
        k = rng.randint(1, k_max)
        x, y, z = (random_homogeneous(rng, k, deg_max) for _ in range(3))
        xy = x * y
        if xy != y * x:
            bad_comm.append(i)
        if xy * z != x * (y * z):
            bad_assoc.append(i)
        if xy and xy.bidegree != tuple(a + b for a, b in zip(x.bidegree, y.bidegree)):
            bad_deg.append(i)
        if x * InvariantElement.scalar(1, k) != x:
            bad_unit.append(i)
        if to_basis(expand(x)) != x or expand(to_basis(expand(x))) != expand(x):
            bad_trip.append(i)
        if i < 40 and slow_mul(x, y) != xy:
            bad_slow.append(i)
        if forgetful(xy) != epoly_mul(forgetful(x), forgetful(y)):
            bad_forget.append(i)
    rep.check("x y = y x", [], bad_comm)
    rep.check("(x y) z = x (y z)", [], bad_assoc)
    rep.check("bidegree(x y) = bidegree(x) + bidegree(y)", [], bad_deg)
    rep.check("1 x = x", [], bad_unit)
    rep.check("to_basis(expand(x)) = x and expand(to_basis(e)) = e", [], bad_trip)
    rep.check("orbit product = full expansion product (first 40 samples)", [], bad_slow)
    rep.check("forgetful map is multiplicative", [], bad_forget)
    return rep


# -- runner ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., Report]] = {
    "charts": verify_charts,
    "cells": verify_cells,
    "bijection": verify_bijection,
    "duality": verify_duality,
    "kronholm": kronholm_combinatorial_check,
    "presentation": verify_presentation,
    "gr4": verify_gr4,
    "products": verify_products,
    "indecomposables": verify_indecomposables,
    "stable": stable_presentation_check,
    "appendix": appendix_report,
    "properties": verify_properties,
}


def all_tasks(k: int = 6, p_max: int = 20) -> list[tuple[str, dict]]:
    """Every suite at the default acceptance ranges; k and p_max cap the chart suites."""
    tasks: list[tuple[str, dict]] = [("charts", {}),
                                     ("cells", {"k_max": k, "r_max": 10}),
                                     ("bijection", {"k_max": min(k, 5), "dim_max": 12}),
                                     ("duality", {"k": k, "p_max": p_max})]
    tasks += [("kronholm", {"k": kk, "p_max": p_max}) for kk in range(1, k + 1)]
    tasks += [("presentation", {"k": 2}), ("presentation", {"k": 3}), ("gr4", {}),
              ("products", {"k_max": min(k, 5), "e_max": 4})]
    tasks += [("indecomposables", {"k": kk, "deg_max": 14}) for kk in range(1, min(k, 5) + 1)]
    tasks += [("stable", {"k": kk, "deg_max": 12}) for kk in range(1, min(k, 4) + 1)]
    tasks += [("appendix", {"n": n, "deg_max": 14}) for n in range(1, min(k, 5) + 1)]
    tasks.append(("properties", {}))
    return tasks


def _run(task: tuple[str, dict]) -> Report:
    name, kwargs = task
    return SUITES[name](**kwargs)


def thread_cap() -> int:
    raw = os.environ.get("EQUIGRASS_THREADS", "")
    cpus = os.cpu_count() or 1
    try:
        n = int(raw) if raw else cpus
    except ValueError:
        raise ValueError(f"EQUIGRASS_THREADS must be an integer, got {raw!r}") from None
    return max(1, min(n, cpus))


def run_suites(tasks: list[tuple[str, dict]], workers: int | None = None) -> list[Report]:
    workers = thread_cap() if workers is None else max(1, workers)
    if workers == 1 or len(tasks) == 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(_run, tasks))

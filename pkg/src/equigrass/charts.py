"""Bigraded rank charts and their ASCII / CSV / JSON forms."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from typing import Iterable, Mapping


class RankChart:
    """Finitely supported map (p, q) -> nonnegative count.

    ``k`` and ``p_max`` are carried along for export; entries with count 0
    are never stored.
    """

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable = (),
                 k: int | None = None, p_max: int | None = None):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = (((p, q), c) for p, q, c in entries)
        self.counts: dict[tuple[int, int], int] = {}
        for (p, q), c in items:
            if c < 0:
                raise ValueError(f"negative count at {(p, q)}")
            if c:
                self.counts[(p, q)] = self.counts.get((p, q), 0) + c
        self.k = k
        if p_max is None:
            p_max = max((p for p, _ in self.counts), default=0)
        self.p_max = p_max

    @classmethod
    def from_bidegrees(cls, degrees: Iterable[tuple[int, int]], **kw) -> "RankChart":
        return cls(Counter(degrees), **kw)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.counts.get(pq, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RankChart) and self.counts == other.counts

    def __repr__(self) -> str:
        return f"RankChart(k={self.k}, p_max={self.p_max}, {len(self.counts)} entries)"

    def merge(self, other: "RankChart") -> "RankChart":
        """Entrywise sum; counts are additive."""
        out = Counter(self.counts)
        out.update(other.counts)
        return RankChart(out, k=self.k, p_max=max(self.p_max, other.p_max))

    def entries(self) -> list[tuple[int, int, int]]:
        return [(p, q, c) for (p, q), c in sorted(self.counts.items())]

    def total(self) -> int:
        return sum(self.counts.values())

    def column_sum(self, p: int) -> int:
        return sum(c for (pp, _), c in self.counts.items() if pp == p)

    def column_sums(self) -> dict[int, int]:
        out: Counter = Counter()
        for (p, _), c in self.counts.items():
            out[p] += c
        return dict(out)

    def diagonal_sums(self) -> dict[int, int]:
        """Sums along q - p = const, keyed by q - p."""
        out: Counter = Counter()
        for (p, q), c in self.counts.items():
            out[q - p] += c
        return dict(out)

    def line(self, j: int) -> list[int]:
        """Ranks at (j + 2r, j + r) for r = 0, 1, ... within p_max."""
        return [self[(j + 2 * r, j + r)] for r in range((self.p_max - j) // 2 + 1)]

    # -- export -------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "p_max": self.p_max,
                           "entries": [list(e) for e in self.entries()]})

    @classmethod
    def from_json(cls, src: str) -> "RankChart":
        data = json.loads(src)
        return cls([tuple(e) for e in data["entries"]], k=data.get("k"),
                   p_max=data.get("p_max"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "q", "count"])
        for e in self.entries():
            w.writerow(e)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, src: str, k: int | None = None,
                 p_max: int | None = None) -> "RankChart":
        rows = list(csv.DictReader(io.StringIO(src)))
        return cls([(int(r["p"]), int(r["q"]), int(r["count"])) for r in rows],
                   k=k, p_max=p_max)

    def to_ascii(self) -> str:
        """Grid with the origin at the bottom left; blank boxes are zero."""
        q_max = max((q for _, q in self.counts), default=0)
        width = max([len(str(c)) for c in self.counts.values()] + [len(str(self.p_max))]) + 1
        label = len(str(q_max)) + 1
        lines = []
        for q in range(q_max, -1, -1):
            cells = []
            for p in range(self.p_max + 1):
                c = self.counts.get((p, q), 0)
                cells.append(str(c).rjust(width) if c else " " * width)
            lines.append(f"{q:>{label - 1}} |" + "".join(cells).rstrip())
        lines.append(" " * (label - 1) + " •" + "-" * (width * (self.p_max + 1)) + " p")
        lines.append(" " * (label + 1) + "".join(str(p).rjust(width) for p in range(self.p_max + 1)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_ascii(cls, src: str, k: int | None = None) -> "RankChart":
        lines = [ln for ln in src.splitlines() if ln.strip()]
        axis, grid = lines[-1], lines[:-2]
        labels = axis.split()
        # the count in column p is right-aligned under the axis label for p
        ends, pos = [], 0
        for tok in labels:
            pos = axis.index(tok, pos) + len(tok)
            ends.append(pos)
        offset = grid[0].index("|") + 1
        width = ends[0] - offset
        entries = []
        for ln in grid:
            head = ln.partition("|")[0]
            for p, end in enumerate(ends):
                cell = ln[end - width:end].strip()
                if cell:
                    entries.append((p, int(head), int(cell)))
        return cls(entries, k=k, p_max=int(labels[-1]))

    def render(self, fmt: str = "ascii") -> str:
        if fmt == "ascii":
            return self.to_ascii()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json() + "\n"
        raise ValueError(f"unknown chart format {fmt!r}")

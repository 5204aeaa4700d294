"""Pass/fail reports shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Named pass/fail lines with expected and computed values."""

    title: str
    lines: list[tuple[bool, str, object, object]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, label: str, expected, computed) -> bool:
        ok = expected == computed
        self.lines.append((ok, label, expected, computed))
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "Report") -> None:
        self.lines.extend(other.lines)
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(ok for ok, *_ in self.lines)

    def failures(self) -> list[str]:
        return [label for ok, label, *_ in self.lines if not ok]

    def render(self) -> str:
        out = [f"== {self.title}"]
        for ok, label, exp, got in self.lines:
            status = "PASS" if ok else "FAIL"
            if exp is True and got is True:
                out.append(f"{status}  {label}")
            else:
                out.append(f"{status}  {label}: expected {_short(exp)}, computed {_short(got)}")
        for text in self.notes:
            out.append(f"      {text}")
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "checks": [{"ok": ok, "label": label, "expected": _jsonable(exp),
                            "computed": _jsonable(got)} for ok, label, exp, got in self.lines],
                "notes": list(self.notes)}


def _short(x) -> str:
    s = str(x)
    return s if len(s) <= 160 else s[:157] + "..."


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return str(x)

"""Structured pass/fail records shared by every check suite."""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
WITNESS_CELL_CAP = 400


@dataclass
class Entry:
    id: str
    anchor: str
    status: str
    witness: dict[str, str] | None = None
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out: dict = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = dict(self.witness)
            if self.truncated:
                out["witness"]["truncated"] = "true"
        return out


def cap_cells(text: str, cap: int = WITNESS_CELL_CAP) -> tuple[str, bool]:
    """Keep at most ``cap`` whitespace-separated cells of a rendered morphism."""
    cells = 0
    out = []
    for line in text.splitlines():
        words = line.split()
        if cells + len(words) > cap:
            keep = cap - cells
            out.append(" ".join(words[:keep]) + " ...")
            return "\n".join(out), True
        cells += len(words)
        out.append(line)
    return "\n".join(out), False


@dataclass
class CheckReport:
    suite: str
    bounds: dict = field(default_factory=dict)
    entries: list[Entry] = field(default_factory=list)

    def add(self, id: str, anchor: str, ok: bool | None, witness: dict | None = None) -> Entry:
        """Record one check; ``ok=None`` records it as skipped."""
        status = SKIPPED if ok is None else (PASS if ok else FAIL)
        truncated = False
        if witness is not None:
            capped = {}
            for key, value in witness.items():
                capped[key], cut = cap_cells(str(value))
                truncated = truncated or cut
            witness = capped
        entry = Entry(id, anchor, status, witness, truncated)
        self.entries.append(entry)
        return entry

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for e in other.entries:
            self.entries.append(Entry(prefix + e.id, e.anchor, e.status, e.witness, e.truncated))
        return self

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.ok]

    def entry(self, id: str) -> Entry:
        for e in self.entries:
            if e.id == id:
                return e
        raise KeyError(id)

    def sorted(self) -> "CheckReport":
        return CheckReport(self.suite, dict(self.bounds), sorted(self.entries, key=lambda e: e.id))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": dict(self.bounds),
            "entries": [e.to_json() for e in sorted(self.entries, key=lambda e: e.id)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def render_text(self) -> str:
        lines = [f"suite {self.suite}  " + " ".join(f"{k}={v}" for k, v in self.bounds.items())]
        for e in sorted(self.entries, key=lambda e: e.id):
            lines.append(f"  [{e.status.upper():4}] {e.id}  ({e.anchor})")
            if e.witness:
                for key, value in e.witness.items():
                    body = value.replace("\n", "\n        ")
                    lines.append(f"      {key}: {body}")
                if e.truncated:
                    lines.append("      (witness truncated)")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{verdict}: {len(self.entries) - len(self.failures)}/{len(self.entries)} checks passed")
        return "\n".join(lines)

    def __str__(self):
        return self.render_text()


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SUPPLYCAT_THREADS", "1")))
    except ValueError:
        return 1


def run_parallel(tasks: Iterable[Callable[[], CheckReport]], suite: str, bounds: dict | None = None) -> CheckReport:
    """Run independent sub-checks, possibly on worker threads, and merge them."""
    tasks = list(tasks)
    workers = min(worker_count(), max(1, len(tasks)))
    if workers == 1:
        parts = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda t: t(), tasks))
    merged = CheckReport(suite, dict(bounds or {}))
    for p in parts:
        merged.extend(p)
    return merged.sorted()

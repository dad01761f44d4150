"""Verification reports: one value, rendered as JSON or as a delimited table.

JSON schema ``matchfactory.report/1``::

    {
      "schema": "matchfactory.report/1",
      "graph": {"family": "H", "k": 1, "variant": "base", "n": 60, "m": 120},
      "checks": [
        {"claim": "...", "anchor": "...", "expected": ..., "computed": ...,
         "verdict": "pass" | "fail" | "unknown"}
      ],
      "search": {...} | null,
      "notes": ["..."],
      "timing": {"seconds": 1.23} | null
    }

``timing`` is filled only on request so that reports are byte-identical
between single-worker runs.  The text rendering is tab-separated with a
header row ``verdict claim anchor expected computed``.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

SCHEMA = "matchfactory.report/1"

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"


@dataclasses.dataclass
class Check:
    claim: str
    anchor: str
    expected: Any
    computed: Any
    verdict: str = ""

    def __post_init__(self):
        if not self.verdict:
            self.verdict = PASS if self.expected == self.computed else FAIL
        if self.verdict not in (PASS, FAIL, UNKNOWN):
            raise ValueError(f"bad verdict {self.verdict!r}")


@dataclasses.dataclass
class VerificationReport:
    graph: dict[str, Any]
    checks: list[Check] = dataclasses.field(default_factory=list)
    search: dict[str, Any] | None = None
    notes: list[str] = dataclasses.field(default_factory=list)
    timing: dict[str, float] | None = None

    def add(self, claim: str, anchor: str, expected: Any, computed: Any, verdict: str = "") -> Check:
        c = Check(claim, anchor, expected, computed, verdict)
        self.checks.append(c)
        return c

    @property
    def exit_code(self) -> int:
        verdicts = {c.verdict for c in self.checks}
        if FAIL in verdicts:
            return 1
        if UNKNOWN in verdicts:
            return 2
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "graph": self.graph,
            "checks": [dataclasses.asdict(c) for c in self.checks],
            "search": self.search,
            "notes": list(self.notes),
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        def cell(x):
            s = x if isinstance(x, str) else json.dumps(x)
            return s.replace("\t", " ").replace("\n", " ")

        head = ", ".join(f"{k}={v}" for k, v in self.graph.items() if v is not None)
        lines = [f"# {head}", "verdict\tclaim\tanchor\texpected\tcomputed"]
        for c in self.checks:
            lines.append("\t".join(cell(x) for x in (c.verdict, c.claim, c.anchor, c.expected, c.computed)))
        for note in self.notes:
            lines.append(f"# note: {note}")
        if self.search:
            lines.append("# search: " + json.dumps(self.search, sort_keys=True))
        if self.timing:
            lines.append(f"# seconds: {self.timing['seconds']:.3f}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()

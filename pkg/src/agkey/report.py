from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class VerifyReport:
    """Outcome of one check on one parameter cell.

    A failing report always carries a ``witness``: the first offending element
    in canonical enumeration order, or the expected and actual polynomials.
    """

    check: str
    params: dict[str, int]
    passed: bool
    witness: dict[str, Any] | None = None
    counts: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def to_record(self, with_time: bool = True) -> dict[str, Any]:
        rec = {
            "check": self.check,
            "params": dict(self.params),
            "passed": self.passed,
            "witness": self.witness,
            "counts": dict(self.counts),
        }
        if with_time:
            rec["elapsed"] = round(self.elapsed, 6)
        return rec

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_record(with_time), sort_keys=True)

    def describe(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        counts = " ".join(f"{k}={v}" for k, v in self.counts.items())
        line = f"{'PASS' if self.passed else 'FAIL'}  {self.check}  {params}"
        if counts:
            line += f"  [{counts}]"
        if not self.passed:
            line += "\n  witness: " + json.dumps(self.witness, sort_keys=True)
        return line


def summary_line(reports: Iterable[VerifyReport]) -> str:
    reports = list(reports)
    ok = sum(r.passed for r in reports)
    tag = "PASS" if ok == len(reports) else "FAIL"
    return f"{tag} {ok}/{len(reports)} checks"

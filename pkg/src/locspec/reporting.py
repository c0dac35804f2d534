"""Law reports: named pass/fail checks with witnesses, mergeable by instance.

A report with zero failures is emitted iff every checked equation held
exactly; there is no tolerance concept anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LawCheck:
    name: str
    passed: bool
    witness: str | None = None

    def to_dict(self):
        return {"name": self.name, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class LawReport:
    instance: str
    laws: tuple[LawCheck, ...]

    @property
    def ok(self) -> bool:
        return all(law.passed for law in self.laws)

    def failures(self) -> tuple[LawCheck, ...]:
        return tuple(law for law in self.laws if not law.passed)

    def to_dict(self):
        return {"instance": self.instance, "laws": [law.to_dict() for law in self.laws]}


def law(name, passed, witness=None) -> LawCheck:
    return LawCheck(name, bool(passed), witness)


def merge_reports(reports) -> LawReport:
    """Merge per-instance reports deterministically (sorted by instance id)."""
    ordered = sorted(reports, key=lambda r: r.instance)
    laws = tuple(
        LawCheck(f"{r.instance} :: {c.name}", c.passed, c.witness)
        for r in ordered
        for c in r.laws
    )
    return LawReport(f"suite[{len(ordered)} instances]", laws)

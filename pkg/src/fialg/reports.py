"""Structured verification reports.

Checks never answer with a bare boolean: a failing check carries the index
tuple it failed at together with both evaluated sides, so a red result can be
reproduced by hand.  Witness lists are assembled in sorted index order and
truncated deterministically, which keeps serialized reports byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_WITNESSES = 10


@dataclass(frozen=True)
class Witness:
    """One failing instance: where, and what both sides evaluated to."""

    indices: tuple
    left: tuple
    right: tuple
    note: str = ""

    def to_json(self, fmt) -> dict:
        out = {
            "indices": list(self.indices),
            "left": [fmt(v) for v in self.left],
            "right": [fmt(v) for v in self.right],
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check over a family of instances."""

    name: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    failure_count: int = 0

    def to_json(self, fmt) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "failure_count": self.failure_count,
            "witnesses": [w.to_json(fmt) for w in self.witnesses],
        }


@dataclass(frozen=True)
class VerificationReport:
    """A bundle of named checks; passes iff every check passes."""

    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def to_json(self, fmt) -> dict:
        return {
            "pass": self.passed,
            "checks": [c.to_json(fmt) for c in self.checks],
        }

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            tail = "" if c.passed else f"  ({c.failure_count} failing instance(s))"
            lines.append(f"  [{mark:>4}] {c.name}{tail}")
        return "\n".join(lines)


def run_check(name: str, instances) -> CheckResult:
    """Fold an iterable of (indices, left, right[, note]) failure tuples into
    a CheckResult.  The iterable yields only *failures*; an empty iterable
    means the check passed."""
    witnesses = []
    count = 0
    for item in instances:
        count += 1
        if len(witnesses) < MAX_WITNESSES:
            if len(item) == 4:
                idx, left, right, note = item
            else:
                idx, left, right = item
                note = ""
            witnesses.append(Witness(tuple(idx), tuple(left), tuple(right), note))
    return CheckResult(name, count == 0, tuple(witnesses), count)

"""Violation reports returned by every validator.

A validator checks each instance of each law it owns and records failures as
(law, witness) pairs. Reports collect *all* violations up to a per-law cap
(default 100) instead of stopping at the first, so a broken fixture shows
its full damage in one run and a flood of failures in one law can never
hide another law's witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_CAP = 100


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def __str__(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.law} at {self.witness}{tail}"


@dataclass
class Report:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    capped: bool = False
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        self._per_law: dict[str, int] = {}
        for v in self.violations:
            self._per_law[v.law] = self._per_law.get(v.law, 0) + 1

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, law: str | None = None) -> int:
        if law is None:
            return len(self.violations)
        return self._per_law.get(law, 0)

    def add(self, law: str, witness: tuple, detail: str = "") -> None:
        """Record one violation, respecting the per-law cap."""
        n = self._per_law.get(law, 0)
        if n >= self.cap:
            self.capped = True
            return
        self._per_law[law] = n + 1
        self.violations.append(Violation(law, witness, detail))

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def merge(self, other: "Report") -> None:
        self.checked += other.checked
        self.capped = self.capped or other.capped
        for v in other.violations:
            self.add(v.law, v.witness, v.detail)

    def laws(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return seen

    def __str__(self) -> str:
        if self.ok:
            return f"ok ({self.checked} checks)"
        head = f"{len(self.violations)} violation(s) in {self.checked} checks"
        if self.capped:
            head += " (capped)"
        lines = [head] + [f"  {v}" for v in self.violations[:10]]
        if len(self.violations) > 10:
            lines.append(f"  ... {len(self.violations) - 10} more")
        return "\n".join(lines)

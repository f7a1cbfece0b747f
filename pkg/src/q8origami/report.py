"""Structured pass/fail records for identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .polyring import MultiPoly


@dataclass
class IdentityReport:
    """Outcome of one identity check.

    ``residual`` holds the nonzero difference when a check fails. Compound
    checks keep their parts in ``children`` and pass only if all parts do.
    ``notes`` records anything worth a human's attention, such as a printed
    form that disagrees with the computation.
    """

    name: str
    passed: bool
    residual: MultiPoly | None = None
    notes: list[str] = field(default_factory=list)
    children: list["IdentityReport"] = field(default_factory=list)

    @classmethod
    def compare(cls, name: str, lhs: MultiPoly, rhs: MultiPoly, note: str | None = None):
        diff = lhs - rhs
        rep = cls(name, not diff, None if not diff else diff)
        if note:
            rep.notes.append(note)
        return rep

    @classmethod
    def group(cls, name: str, children: list["IdentityReport"], notes=None):
        return cls(name, all(c.passed for c in children), None, list(notes or []), children)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list["IdentityReport"]:
        out = [] if self.passed or self.children else [self]
        for c in self.children:
            out.extend(c.failures())
        return out

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"name": self.name, "status": self.status}
        if self.residual is not None:
            d["residual"] = str(self.residual)
        if self.notes:
            d["notes"] = list(self.notes)
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d

    def flatten(self, prefix: str = "") -> list[tuple[str, "IdentityReport"]]:
        """(dotted name, report) for this node and every descendant."""
        full = f"{prefix}.{self.name}" if prefix else self.name
        out = [(full, self)]
        for c in self.children:
            out.extend(c.flatten(full))
        return out

"""Check records shared by the verification suites and the CLI harness."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    """Outcome of one verification item.

    ``status`` is one of pass/fail/skipped/inconclusive; inconclusive is
    reserved for rank computations whose specializations disagree.
    """

    check_id: str
    anchor: str
    status: str
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "skipped")


def passfail(check_id: str, anchor: str, ok: bool, **detail) -> CheckRecord:
    return CheckRecord(check_id, anchor, "pass" if ok else "fail", detail)

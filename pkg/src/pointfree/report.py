"""Pass/fail verdicts that carry a counterexample instead of raising."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def fail(witness: Any, reason: str = "") -> Verdict:
    return Verdict(False, witness, reason)

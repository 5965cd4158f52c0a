from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Validity:
    """Outcome of a validation; falsy when rejected.

    ``index`` locates the first offence (step index or row number) and
    ``rule`` names the violated condition.
    """

    ok: bool
    index: int | None = None
    rule: str | None = None

    def __bool__(self) -> bool:
        return self.ok


VALID = Validity(True)

"""Three-valued outcome of a (possibly semi-decidable) check."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HOLDS_UP_TO = "holds_up_to"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: tuple = ()
    bound: int | None = None

    @classmethod
    def holds(cls) -> Verdict:
        return cls(Status.HOLDS)

    @classmethod
    def fails(cls, *witness) -> Verdict:
        return cls(Status.FAILS, tuple(witness))

    @classmethod
    def holds_up_to(cls, bound: int) -> Verdict:
        return cls(Status.HOLDS_UP_TO, (), bound)

    @classmethod
    def of(cls, ok: bool, *witness) -> Verdict:
        return cls.holds() if ok else cls.fails(*witness)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    @property
    def ok(self) -> bool:
        """True unless a violation was found (exact or bounded success)."""
        return self.status is not Status.FAILS

    @property
    def exact(self) -> bool:
        return self.status is not Status.HOLDS_UP_TO

    def __bool__(self):
        raise TypeError("use Verdict.ok or Verdict.failed; a bounded verdict is not a bool")

    def weaken(self, bound: int | None) -> Verdict:
        """Downgrade Holds to HoldsUpToBound (used when the search space was partial)."""
        if self.status is Status.HOLDS and bound is not None:
            return Verdict.holds_up_to(bound)
        return self

    @staticmethod
    def all(verdicts: Iterable[Verdict]) -> Verdict:
        bound = None
        for v in verdicts:
            if v.failed:
                return v
            if v.status is Status.HOLDS_UP_TO:
                bound = v.bound if bound is None else max(bound, v.bound)
        return Verdict.holds() if bound is None else Verdict.holds_up_to(bound)

    def __str__(self):
        if self.status is Status.FAILS:
            return f"Fails{self.witness!r}"
        if self.status is Status.HOLDS_UP_TO:
            return f"HoldsUpToBound({self.bound})"
        return "Holds"


HOLDS = Verdict.holds()

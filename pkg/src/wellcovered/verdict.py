"""Three-valued answers carried by every decision operation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Generic, TypeVar

W = TypeVar("W")


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict(Generic[W]):
    """``witness`` is set iff YES, ``counterexample`` iff NO, ``reason`` iff UNKNOWN."""

    status: Status
    witness: W | None = None
    counterexample: Any = None
    reason: str | None = None
    theorem: str | None = None

    @classmethod
    def yes(cls, witness: W = None, theorem: str | None = None) -> "Verdict[W]":
        return cls(Status.YES, witness=witness, theorem=theorem)

    @classmethod
    def no(cls, counterexample: Any = None, theorem: str | None = None) -> "Verdict[W]":
        return cls(Status.NO, counterexample=counterexample, theorem=theorem)

    @classmethod
    def unknown(cls, reason: str, theorem: str | None = None) -> "Verdict[W]":
        return cls(Status.UNKNOWN, reason=reason, theorem=theorem)

    @classmethod
    def of(cls, flag: bool, witness: W = None, counterexample: Any = None, theorem: str | None = None) -> "Verdict[W]":
        return cls.yes(witness, theorem) if flag else cls.no(counterexample, theorem)

    @property
    def is_yes(self) -> bool:
        return self.status is Status.YES

    @property
    def is_no(self) -> bool:
        return self.status is Status.NO

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def __bool__(self) -> bool:
        raise TypeError("a Verdict is three-valued; test .is_yes / .is_no explicitly")

"""Exception types and the law-report entry shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass


class PolycatError(Exception):
    """Base class for all errors raised by this package."""


class ObjectNotInBase(PolycatError):
    pass


class NotComposable(PolycatError):
    pass


class BaseMismatch(PolycatError):
    pass


class KindArityMismatch(PolycatError):
    pass


class InvalidInput(PolycatError):
    pass


class InvalidEnriched(InvalidInput):
    pass


class InvalidComonoid(InvalidInput):
    pass


class DepthExceeded(PolycatError):
    pass


class PartialAssignment(PolycatError):
    pass


class BoundViolated(PolycatError):
    def __init__(self, point, cost, bound):
        super().__init__(f"point {point!r}: path cost {cost} exceeds bound {bound}")
        self.point = point
        self.cost = cost
        self.bound = bound


class SpaceMismatch(PolycatError):
    pass


class WindowTooSmall(PolycatError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed law: a short law id plus the labels that witness the failure."""

    law: str
    where: tuple = ()
    detail: str = ""

    def __str__(self) -> str:
        from .labels import format_label

        parts = [self.law]
        if self.where:
            parts.append(" ".join(format_label(w) if isinstance(w, (str, tuple)) else str(w)
                                  for w in self.where))
        if self.detail:
            parts.append(f"-- {self.detail}")
        return " ".join(parts)


def laws(report) -> set[str]:
    """The set of law ids mentioned in a report."""
    return {v.law for v in report}

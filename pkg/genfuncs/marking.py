"""
Mark assignments for the corner variables.

Both corner types attach a variable to each ``(first run, second run)`` pair:
``(down, horizontal)`` for type A and ``(horizontal, down)`` for type B.  A
``Marking`` decides which pairs are marked and what value they take: the jet
``1+ε`` by default, so that derivative parts count marked corners, or an exact
rational weight.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict

from algebra.jet import EPSILON_MARK, Coefficient
from utils.errors import UsageError
from utils.models import MarkMode


class Marking(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mode: MarkMode = MarkMode.UNMARKED
    v: Optional[int] = None
    w: Optional[int] = None
    weight: Optional[Fraction] = None

    # ── Constructors ──────────────────────────────────────────────────────────

    @classmethod
    def unmarked(cls) -> Marking:
        return cls(mode=MarkMode.UNMARKED)

    @classmethod
    def all(cls, weight: Fraction | int | None = None) -> Marking:
        return cls(mode=MarkMode.ALL, weight=_as_weight(weight))

    @classmethod
    def single(cls, v: int, w: int, weight: Fraction | int | None = None) -> Marking:
        if v < 1 or w < 1:
            raise UsageError(f"(v, w) must be positive, got ({v}, {w})")
        return cls(mode=MarkMode.SINGLE, v=v, w=w, weight=_as_weight(weight))

    # ── Evaluation ────────────────────────────────────────────────────────────

    @property
    def mark_value(self) -> Coefficient:
        return EPSILON_MARK if self.weight is None else self.weight

    def is_marked(self, first: int, second: int) -> bool:
        if self.mode is MarkMode.ALL:
            return True
        if self.mode is MarkMode.SINGLE:
            return (first, second) == (self.v, self.w)
        return False

    def factor(self, first: int, second: int) -> Coefficient:
        """Value substituted for the corner variable of a ``(first, second)`` corner."""
        return self.mark_value if self.is_marked(first, second) else 1

    def excess(self, first: int, second: int) -> Coefficient:
        """``factor - 1``: zero for unmarked pairs."""
        return self.mark_value - 1 if self.is_marked(first, second) else 0

    def describe(self) -> str:
        weight = "1+eps" if self.weight is None else str(self.weight)
        if self.mode is MarkMode.SINGLE:
            return f"single({self.v},{self.w})={weight}"
        if self.mode is MarkMode.ALL:
            return f"all={weight}"
        return "unmarked"


def _as_weight(weight: Fraction | int | None) -> Fraction | None:
    if weight is None:
        return None
    weight = Fraction(weight)
    if weight == 1:
        raise UsageError("a weight of 1 is the unmarked series; use Marking.unmarked()")
    return weight

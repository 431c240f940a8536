"""
Bargraphs as height words and their type A / type B corners.

A bargraph with m columns is the word ``π1 π2 ... πm`` of its column heights.
Walking the upper boundary from left to right:

* a type A corner (down-run then horizontal-run) sits at every interior descent
  ``π(j-1) > π(j)``: ``a = π(j-1) - π(j)`` and ``b`` is the length of the
  constant run starting at column j;
* a type B corner (horizontal-run then down-run) sits at every column j with
  ``π(j+1) < π(j)``, reading ``π(m+1) = 0``: ``a`` is the length of the constant
  run ending at column j and ``b = π(j) - π(j+1)``.  The final drop to the
  x-axis is a type B corner.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from utils.errors import InvalidWordError
from utils.models import CornerKind


class Corner(NamedTuple):
    kind: CornerKind
    a: int
    b: int
    col: int

    def label(self) -> str:
        return f"{self.kind.value}({self.a},{self.b})@{self.col}"


@dataclass(frozen=True, slots=True)
class Bargraph:
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        for h in self.heights:
            if h < 1:
                raise InvalidWordError(f"column heights must be positive, got {self.heights}")

    @classmethod
    def parse(cls, word: str | Sequence[int]) -> Bargraph:
        """Accept ``"244411322"`` (single-digit heights) or a sequence of ints."""
        if isinstance(word, str):
            if not word.isdigit():
                raise InvalidWordError(f"height word must be digits, got {word!r}")
            return cls(tuple(int(ch) for ch in word))
        return cls(tuple(word))

    @property
    def cells(self) -> int:
        return sum(self.heights)

    @property
    def columns(self) -> int:
        return len(self.heights)

    @property
    def max_height(self) -> int:
        return max(self.heights, default=0)

    def word(self) -> str:
        if all(h < 10 for h in self.heights):
            return "".join(map(str, self.heights))
        return ",".join(map(str, self.heights))

    def corners(self) -> list[Corner]:
        return corners(self)

    def __str__(self) -> str:
        return self.word()


def corners(g: Bargraph) -> list[Corner]:
    """All type A and type B corners of ``g``, ordered by column then kind."""
    pi = g.heights
    m = len(pi)
    found: list[Corner] = []
    # run_start[j] / run_end[j]: bounds of the constant run containing column j (0-based)
    run_start = [0] * m
    for j in range(1, m):
        run_start[j] = run_start[j - 1] if pi[j] == pi[j - 1] else j
    run_end = [m - 1] * m
    for j in range(m - 2, -1, -1):
        run_end[j] = run_end[j + 1] if pi[j] == pi[j + 1] else j

    for j in range(m):
        if j > 0 and pi[j - 1] > pi[j]:
            found.append(Corner(CornerKind.A, pi[j - 1] - pi[j], run_end[j] - j + 1, j + 1))
        following = pi[j + 1] if j + 1 < m else 0
        if following < pi[j]:
            found.append(Corner(CornerKind.B, j - run_start[j] + 1, pi[j] - following, j + 1))
    return found


def corner_counts(g: Bargraph) -> tuple[int, int]:
    """(number of type A corners, number of type B corners)."""
    a = b = 0
    for corner in corners(g):
        if corner.kind is CornerKind.A:
            a += 1
        else:
            b += 1
    return a, b


# ─────────────────────────────────────────────────────────────────────────────
# Enumeration
# ─────────────────────────────────────────────────────────────────────────────

def _compositions(
    n: int, k: int | None, hmax: int | None, first_height: int | None = None
) -> Iterator[tuple[int, ...]]:
    top = n if hmax is None else min(n, hmax)
    if n == 0:
        if k is None or k == 0:
            yield ()
        return
    if k is not None and (k <= 0 or k > n or (hmax is not None and k * hmax < n)):
        return
    heights = [first_height] if first_height is not None else range(1, top + 1)
    for h in heights:
        if h < 1 or h > top:
            continue
        rest_k = None if k is None else k - 1
        for tail in _compositions(n - h, rest_k, hmax):
            yield (h, *tail)


def enumerate_bargraphs(
    n: int, k: int | None = None, hmax: int | None = None, *, first_height: int | None = None
) -> Iterator[Bargraph]:
    """
    Every bargraph with n cells, in lexicographic order of height words.

    ``k`` fixes the column count, ``hmax`` caps every height and
    ``first_height`` fixes the first column (used to partition a census).
    """
    if n < 0:
        raise InvalidWordError(f"cell count must be non-negative, got {n}")
    for heights in _compositions(n, k, hmax, first_height):
        yield Bargraph(heights)

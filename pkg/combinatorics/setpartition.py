"""Set partitions in canonical sequential form (restricted growth strings)."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from combinatorics.bargraph import Bargraph
from utils.errors import InvalidWordError


@dataclass(frozen=True, slots=True)
class SetPartitionWord:
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        running_max = 0
        for letter in self.letters:
            if letter < 1 or letter > running_max + 1:
                raise InvalidWordError(f"{self.letters} is not a restricted growth string")
            running_max = max(running_max, letter)

    @classmethod
    def parse(cls, word: str | Sequence[int]) -> SetPartitionWord:
        if isinstance(word, str):
            if not word.isdigit():
                raise InvalidWordError(f"set-partition word must be digits, got {word!r}")
            return cls(tuple(int(ch) for ch in word))
        return cls(tuple(word))

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def blocks(self) -> int:
        return max(self.letters, default=0)

    def word(self) -> str:
        return Bargraph(self.letters).word()


def as_bargraph(w: SetPartitionWord | Sequence[int]) -> Bargraph:
    """Letters become column heights."""
    if not isinstance(w, SetPartitionWord):
        w = SetPartitionWord(tuple(w))
    return Bargraph(w.letters)


def growth_strings(n: int, k: int | None = None) -> Iterator[tuple[int, ...]]:
    """Raw letter tuples; the census hot path skips per-word validation."""
    if n == 0:
        if not k:
            yield ()
        return
    word = [1] * n

    def extend(pos: int, running_max: int) -> Iterator[tuple[int, ...]]:
        if k is not None and running_max + (n - pos) < k:
            return
        if pos == n:
            if k is None or running_max == k:
                yield tuple(word)
            return
        top = running_max + 1 if k is None else min(running_max + 1, k)
        for letter in range(1, top + 1):
            word[pos] = letter
            yield from extend(pos + 1, max(running_max, letter))

    yield from extend(1, 1)


def enumerate_setpartitions(n: int, k: int | None = None) -> Iterator[SetPartitionWord]:
    """Restricted growth strings of length n (with exactly k blocks if given), lexicographically."""
    if n < 0:
        raise InvalidWordError(f"ground-set size must be non-negative, got {n}")
    for letters in growth_strings(n, k):
        yield SetPartitionWord(letters)

"""Stirling numbers of the second kind and Bell numbers."""
from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def stirling(n: int, k: int) -> int:
    """S(n, k); zero outside ``0 <= k <= n`` (negative arguments included)."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == k:
        return 1
    if k == 0:
        return 0
    # iterate rows to keep recursion depth flat
    row = [1]
    for m in range(1, n + 1):
        nxt = [0] * (m + 1)
        for j in range(1, m + 1):
            nxt[j] = (row[j - 1] if j - 1 < len(row) else 0) + (j * row[j] if j < len(row) else 0)
        row = nxt
    return row[k]


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n < 0:
        return 0
    return sum(stirling(n, k) for k in range(n + 1))


def stirling_row(n: int) -> list[int]:
    return [stirling(n, k) for k in range(n + 1)]

"""
Sums over strictly increasing index chains.

For a kernel ``k(a, b)`` (defined for ``a > b``) the closed forms need

    L(j, s) = Σ_{j = i(s+1) < i(s) < ... < i(0) <= top}  Π_{l=0..s} k(i(l), i(l+1))

summed over ``s >= 0``, optionally with the last index pinned: ``i(0) = a``.
Kernels must have x-order at least their first index, so a chain's x-order
is at least ``i(0) + ... + i(s) >= (s+1)·j + C(s+2, 2)`` and the sum over
``s`` terminates once that bound passes the x-cap.
"""
from __future__ import annotations

from collections.abc import Callable
from math import comb

from algebra.series import TruncatedSeries, bounded_sum

Kernel = Callable[[int, int], TruncatedSeries]


def chain_order_bound(j: int, s: int) -> int:
    return (s + 1) * j + comb(s + 2, 2)


class ChainSums:
    def __init__(self, kernel: Kernel, top: int, xcap: int, ycap: int) -> None:
        self.kernel = kernel
        self.top = min(top, xcap)
        self.xcap = xcap
        self.ycap = ycap
        self._free: dict[tuple[int, int], TruncatedSeries] = {}
        self._pinned: dict[tuple[int, int, int], TruncatedSeries] = {}

    def _zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.xcap, self.ycap)

    def level(self, s: int, j: int) -> TruncatedSeries:
        """L(j, s): chains of exactly s+1 links starting at j."""
        key = (s, j)
        if key not in self._free:
            total = self._zero()
            for i in range(j + 1, self.top + 1):
                link = self.kernel(i, j)
                if link.is_zero():
                    continue
                rest = None if s == 0 else self.level(s - 1, i)
                if rest is not None and rest.is_zero():
                    continue
                total = total.add(link if rest is None else link.mul(rest))
            self._free[key] = total
        return self._free[key]

    def pinned_level(self, s: int, j: int, end: int) -> TruncatedSeries:
        """L_end(j, s): as ``level`` but the chain must finish at ``end``."""
        key = (s, j, end)
        if key not in self._pinned:
            if j >= end or end > self.top:
                total = self._zero()
            elif s == 0:
                total = self.kernel(end, j)
            else:
                total = self._zero()
                for i in range(j + 1, end):
                    link = self.kernel(i, j)
                    if link.is_zero():
                        continue
                    rest = self.pinned_level(s - 1, i, end)
                    if not rest.is_zero():
                        total = total.add(link.mul(rest))
            self._pinned[key] = total
        return self._pinned[key]

    def total(self, j: int) -> TruncatedSeries:
        """Σ_s L(j, s)."""
        return bounded_sum(
            lambda s: self.level(s, j),
            lambda s: chain_order_bound(j, s),
            xcap=self.xcap,
            ycap=self.ycap,
        )

    def pinned_total(self, j: int, end: int) -> TruncatedSeries:
        """Σ_s L_end(j, s)."""
        return bounded_sum(
            lambda s: self.pinned_level(s, j, end),
            lambda s: chain_order_bound(j, s),
            xcap=self.xcap,
            ycap=self.ycap,
        )

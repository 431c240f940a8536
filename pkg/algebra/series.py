"""
Truncated bivariate power series with exact coefficients.

A ``TruncatedSeries`` is a polynomial in ``x`` (cells) and ``y`` (columns)
reduced modulo the rectangular ideal ``(x^(xcap+1), y^(ycap+1))``.
Coefficients are ``int``/``Fraction`` or ``Jet`` values; both domains mix
freely.  Storage is sparse and zero coefficients are never kept, so
multiplication and inversion cost scale with the supports involved.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

from typing_extensions import override

from algebra.jet import Coefficient, Jet, deriv_of, value_of
from utils.errors import AlgebraDomainError, UsageError

Monomial = tuple[int, int]


def _reciprocal(c: Coefficient) -> Coefficient:
    if isinstance(c, Jet):
        return c.inverse()
    if c == 0:
        raise AlgebraDomainError("series with zero constant term is not invertible")
    return Fraction(1) / c


class TruncatedSeries:
    __slots__ = ("xcap", "ycap", "_coeffs")

    def __init__(
        self, xcap: int, ycap: int, coeffs: Mapping[Monomial, Coefficient] | None = None
    ) -> None:
        if xcap < 0 or ycap < 0:
            raise UsageError(f"caps must be non-negative, got ({xcap}, {ycap})")
        self.xcap = xcap
        self.ycap = ycap
        self._coeffs: dict[Monomial, Coefficient] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise UsageError(f"negative exponent in monomial ({i}, {j})")
            if i <= xcap and j <= ycap and c:
                self._coeffs[(i, j)] = c

    @classmethod
    def _raw(cls, xcap: int, ycap: int, coeffs: dict[Monomial, Coefficient]) -> TruncatedSeries:
        series = cls.__new__(cls)
        series.xcap = xcap
        series.ycap = ycap
        series._coeffs = coeffs
        return series

    # ── Constructors ──────────────────────────────────────────────────────────

    @classmethod
    def zero(cls, xcap: int, ycap: int) -> TruncatedSeries:
        return cls(xcap, ycap)

    @classmethod
    def constant(cls, c: Coefficient, xcap: int, ycap: int) -> TruncatedSeries:
        return cls(xcap, ycap, {(0, 0): c})

    @classmethod
    def one(cls, xcap: int, ycap: int) -> TruncatedSeries:
        return cls.constant(1, xcap, ycap)

    @classmethod
    def monomial(cls, i: int, j: int, c: Coefficient = 1, *, xcap: int, ycap: int) -> TruncatedSeries:
        return cls(xcap, ycap, {(i, j): c})

    @classmethod
    def from_rows(cls, rows: Mapping[int, Mapping[int, Coefficient]], xcap: int, ycap: int) -> TruncatedSeries:
        """Build from ``{x-degree: {y-degree: coefficient}}``."""
        return cls(xcap, ycap, {(i, j): c for i, row in rows.items() for j, c in row.items()})

    # ── Inspection ────────────────────────────────────────────────────────────

    @property
    def coeffs(self) -> Mapping[Monomial, Coefficient]:
        return MappingProxyType(self._coeffs)

    def coefficient(self, i: int, j: int) -> Coefficient:
        return self._coeffs.get((i, j), 0)

    def items(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(sorted(self._coeffs.items()))

    def row(self, i: int) -> dict[int, Coefficient]:
        return {j: c for (k, j), c in self._coeffs.items() if k == i}

    def rows(self) -> dict[int, dict[int, Coefficient]]:
        out: dict[int, dict[int, Coefficient]] = {}
        for (i, j), c in self._coeffs.items():
            out.setdefault(i, {})[j] = c
        return out

    def is_zero(self) -> bool:
        return not self._coeffs

    def x_order(self) -> int | None:
        """Smallest x-degree present, ``None`` for the zero series."""
        return min((i for i, _ in self._coeffs), default=None)

    def x_total(self, i: int) -> Coefficient:
        """Coefficient of ``x^i`` after setting ``y = 1``."""
        return sum((c for (k, _), c in self._coeffs.items() if k == i), Fraction(0))

    def has_jets(self) -> bool:
        return any(isinstance(c, Jet) for c in self._coeffs.values())

    # ── Arithmetic ────────────────────────────────────────────────────────────

    def _check_caps(self, other: TruncatedSeries) -> None:
        if (self.xcap, self.ycap) != (other.xcap, other.ycap):
            raise UsageError(
                f"cap mismatch: ({self.xcap}, {self.ycap}) vs ({other.xcap}, {other.ycap})"
            )

    def _coerce(self, other: object) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            self._check_caps(other)
            return other
        if isinstance(other, (Rational, Jet)):
            return TruncatedSeries.constant(other, self.xcap, self.ycap)
        return None

    def add(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_caps(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            total = out.get(key, 0) + c
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return TruncatedSeries._raw(self.xcap, self.ycap, out)

    def neg(self) -> TruncatedSeries:
        return TruncatedSeries._raw(self.xcap, self.ycap, {k: -c for k, c in self._coeffs.items()})

    def sub(self, other: TruncatedSeries) -> TruncatedSeries:
        return self.add(other.neg())

    def scale(self, factor: Coefficient) -> TruncatedSeries:
        out = {}
        for key, c in self._coeffs.items():
            product = c * factor
            if product:
                out[key] = product
        return TruncatedSeries._raw(self.xcap, self.ycap, out)

    def shift(self, dx: int, dy: int) -> TruncatedSeries:
        """Multiply by ``x^dx y^dy``."""
        if dx < 0 or dy < 0:
            raise UsageError(f"shift exponents must be non-negative, got ({dx}, {dy})")
        out = {
            (i + dx, j + dy): c
            for (i, j), c in self._coeffs.items()
            if i + dx <= self.xcap and j + dy <= self.ycap
        }
        return TruncatedSeries._raw(self.xcap, self.ycap, out)

    def mul(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_caps(other)
        if not self._coeffs or not other._coeffs:
            return TruncatedSeries.zero(self.xcap, self.ycap)
        xcap, ycap = self.xcap, self.ycap
        right = sorted(other._coeffs.items())
        out: dict[Monomial, Coefficient] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in right:
                i = i1 + i2
                if i > xcap:
                    break
                j = j1 + j2
                if j > ycap:
                    continue
                out[(i, j)] = out.get((i, j), 0) + c1 * c2
        return TruncatedSeries._raw(xcap, ycap, {k: c for k, c in out.items() if c})

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse up to caps, by the order-by-order recurrence."""
        head = self._coeffs.get((0, 0), 0)
        if not head or not value_of(head):
            raise AlgebraDomainError("series with zero constant term is not invertible")
        inv_head = _reciprocal(head)
        tail = [(k, c) for k, c in sorted(self._coeffs.items()) if k != (0, 0)]
        out: dict[Monomial, Coefficient] = {}
        for i in range(self.xcap + 1):
            for j in range(self.ycap + 1):
                if i == 0 and j == 0:
                    out[(0, 0)] = inv_head
                    continue
                acc: Coefficient = 0
                for (k, l), c in tail:
                    if k > i:
                        break
                    if l > j:
                        continue
                    prev = out.get((i - k, j - l))
                    if prev:
                        acc = acc + c * prev
                if acc:
                    term = -(acc * inv_head)
                    if term:
                        out[(i, j)] = term
        return TruncatedSeries._raw(self.xcap, self.ycap, out)

    def power(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = TruncatedSeries.one(self.xcap, self.ycap)
        base = self
        while exponent:
            if exponent & 1:
                result = result.mul(base)
            exponent >>= 1
            if exponent:
                base = base.mul(base)
        return result

    # ── Projections ───────────────────────────────────────────────────────────

    def truncate(self, xcap: int, ycap: int) -> TruncatedSeries:
        if xcap > self.xcap or ycap > self.ycap:
            raise UsageError("truncate can only lower the caps")
        return TruncatedSeries(xcap, ycap, self._coeffs)

    def value_part(self) -> TruncatedSeries:
        return TruncatedSeries(self.xcap, self.ycap, {k: value_of(c) for k, c in self._coeffs.items()})

    def deriv_part(self) -> TruncatedSeries:
        return TruncatedSeries(self.xcap, self.ycap, {k: deriv_of(c) for k, c in self._coeffs.items()})

    def at_x_one(self) -> TruncatedSeries:
        """Set ``x = 1``; exact only when the caller knows the x-cap bounds every contribution."""
        out: dict[Monomial, Coefficient] = {}
        for (_, j), c in self._coeffs.items():
            out[(0, j)] = out.get((0, j), 0) + c
        return TruncatedSeries(0, self.ycap, out)

    def at_y_one(self) -> TruncatedSeries:
        out: dict[Monomial, Coefficient] = {}
        for (i, _), c in self._coeffs.items():
            out[(i, 0)] = out.get((i, 0), 0) + c
        return TruncatedSeries(self.xcap, 0, out)

    def derivative_y(self) -> TruncatedSeries:
        """Formal derivative in ``y``; the top y-degree is lost."""
        out = {(i, j - 1): j * c for (i, j), c in self._coeffs.items() if j > 0}
        return TruncatedSeries(self.xcap, self.ycap, out)

    # ── Operators ─────────────────────────────────────────────────────────────

    def __add__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else self.add(rhs)

    __radd__ = __add__

    def __sub__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else self.sub(rhs)

    def __rsub__(self, other: object) -> TruncatedSeries:
        lhs = self._coerce(other)
        return NotImplemented if lhs is None else lhs.sub(self)

    def __neg__(self) -> TruncatedSeries:
        return self.neg()

    def __mul__(self, other: object) -> TruncatedSeries:
        if isinstance(other, (Rational, Jet)):
            return self.scale(other)
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else self.mul(rhs)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> TruncatedSeries:
        if isinstance(other, (Rational, Jet)):
            return self.scale(_reciprocal(other))
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else self.mul(rhs.inverse())

    def __rtruediv__(self, other: object) -> TruncatedSeries:
        lhs = self._coerce(other)
        return NotImplemented if lhs is None else lhs.mul(self.inverse())

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if not isinstance(exponent, int):
            return NotImplemented
        return self.power(exponent)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.xcap, self.ycap) == (other.xcap, other.ycap) and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    @override
    def __repr__(self) -> str:
        terms = " + ".join(f"({c})x^{i}y^{j}" for (i, j), c in self.items()) or "0"
        return f"TruncatedSeries[{self.xcap},{self.ycap}]({terms})"


# ─────────────────────────────────────────────────────────────────────────────
# Ring shorthand
# ─────────────────────────────────────────────────────────────────────────────

class SeriesRing:
    """Fixed caps plus the generators ``x`` and ``y``, for writing rational functions."""

    def __init__(self, xcap: int, ycap: int) -> None:
        self.xcap = xcap
        self.ycap = ycap

    @property
    def x(self) -> TruncatedSeries:
        return TruncatedSeries.monomial(1, 0, xcap=self.xcap, ycap=self.ycap)

    @property
    def y(self) -> TruncatedSeries:
        return TruncatedSeries.monomial(0, 1, xcap=self.xcap, ycap=self.ycap)

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.xcap, self.ycap)

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.xcap, self.ycap)

    def const(self, c: Coefficient) -> TruncatedSeries:
        return TruncatedSeries.constant(c, self.xcap, self.ycap)

    def mono(self, i: int, j: int, c: Coefficient = 1) -> TruncatedSeries:
        return TruncatedSeries.monomial(i, j, c, xcap=self.xcap, ycap=self.ycap)

    def sum(self, terms: Iterable[TruncatedSeries]) -> TruncatedSeries:
        return series_sum(terms, self.xcap, self.ycap)

    def product(self, factors: Iterable[TruncatedSeries]) -> TruncatedSeries:
        result = self.one()
        for factor in factors:
            result = result.mul(factor)
        return result


# ─────────────────────────────────────────────────────────────────────────────
# Module-level operations
# ─────────────────────────────────────────────────────────────────────────────

def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.add(b)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.mul(b)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def series_sum(terms: Iterable[TruncatedSeries], xcap: int, ycap: int) -> TruncatedSeries:
    total = TruncatedSeries.zero(xcap, ycap)
    for term in terms:
        total = total.add(term)
    return total


def bounded_sum(
    family: Callable[[int], TruncatedSeries],
    min_xorder: Callable[[int], int],
    *,
    xcap: int,
    ycap: int,
    start: int = 0,
    strict_from: int | None = None,
) -> TruncatedSeries:
    """
    Sum ``family(s)`` for ``s = start, start+1, ...`` while ``min_xorder(s) <= xcap``.

    ``min_xorder(s)`` must be a lower bound on the x-order of ``family(s)`` and
    strictly increasing from ``strict_from`` on (default: from ``start``); the
    truncated infinite sum is then exact.  Indices before ``strict_from`` may
    plateau or drop: each is summed when its bound is within the cap and never
    ends the loop.
    """
    strict_from = start if strict_from is None else strict_from
    if strict_from < start:
        raise UsageError(f"strict_from {strict_from} precedes start {start}")
    total = TruncatedSeries.zero(xcap, ycap)
    previous: int | None = None
    s = start
    while True:
        bound = min_xorder(s)
        strict = s >= strict_from
        if strict and previous is not None and bound <= previous:
            raise UsageError(f"summation bound not increasing at index {s}: {previous} -> {bound}")
        if bound > xcap:
            if strict:
                return total
        else:
            term = family(s)
            order = term.x_order()
            if order is not None and order < bound:
                raise UsageError(f"term {s} has x-order {order} below its declared bound {bound}")
            total = total.add(term)
        previous = bound if strict else None
        s += 1

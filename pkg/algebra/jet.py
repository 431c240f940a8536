"""
First-order jets (dual numbers) over exact rationals.

A jet ``value + deriv·ε`` with ``ε² = 0`` carries a function value together
with its first derivative.  Substituting ``Jet(1, 1)`` for a mark variable and
evaluating a series therefore yields the series at mark 1 (value part) and its
derivative with respect to the mark at 1 (derivative part).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from typing_extensions import override

from utils.errors import AlgebraDomainError

Coefficient = Union[int, Fraction, "Jet"]


class Jet:
    __slots__ = ("value", "deriv")

    def __init__(self, value: int | Fraction = 0, deriv: int | Fraction = 0) -> None:
        self.value = Fraction(value)
        self.deriv = Fraction(deriv)

    @classmethod
    def lift(cls, other: Coefficient) -> Jet:
        if isinstance(other, Jet):
            return other
        if isinstance(other, Rational):
            return cls(other, 0)
        return NotImplemented

    # ── Ring operations ───────────────────────────────────────────────────────

    def __add__(self, other: Coefficient) -> Jet:
        other = Jet.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.value + other.value, self.deriv + other.deriv)

    __radd__ = __add__

    def __neg__(self) -> Jet:
        return Jet(-self.value, -self.deriv)

    def __sub__(self, other: Coefficient) -> Jet:
        other = Jet.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.value - other.value, self.deriv - other.deriv)

    def __rsub__(self, other: Coefficient) -> Jet:
        other = Jet.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Coefficient) -> Jet:
        if isinstance(other, Jet):
            return Jet(self.value * other.value, self.value * other.deriv + self.deriv * other.value)
        if isinstance(other, Rational):
            return Jet(self.value * other, self.deriv * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> Jet:
        if self.value == 0:
            raise AlgebraDomainError(f"jet {self} has zero value part and is not invertible")
        inv = 1 / self.value
        return Jet(inv, -self.deriv * inv * inv)

    def __truediv__(self, other: Coefficient) -> Jet:
        other = Jet.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Coefficient) -> Jet:
        other = Jet.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> Jet:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        # (a + bε)^n = a^n + n a^(n-1) b ε
        if exponent == 0:
            return Jet(1, 0)
        return Jet(self.value**exponent, exponent * self.value ** (exponent - 1) * self.deriv)

    # ── Comparison / hashing ──────────────────────────────────────────────────

    @override
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Jet):
            return self.value == other.value and self.deriv == other.deriv
        if isinstance(other, Rational):
            return self.deriv == 0 and self.value == other
        return NotImplemented

    @override
    def __hash__(self) -> int:
        if self.deriv == 0:
            return hash(self.value)
        return hash((self.value, self.deriv))

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.deriv)

    @override
    def __repr__(self) -> str:
        return f"Jet({self.value}, {self.deriv})"

    @override
    def __str__(self) -> str:
        return f"{self.value}+{self.deriv}ε" if self.deriv >= 0 else f"{self.value}{self.deriv}ε"


EPSILON_MARK = Jet(1, 1)


def value_of(c: Coefficient) -> Fraction:
    return c.value if isinstance(c, Jet) else Fraction(c)


def deriv_of(c: Coefficient) -> Fraction:
    return c.deriv if isinstance(c, Jet) else Fraction(0)

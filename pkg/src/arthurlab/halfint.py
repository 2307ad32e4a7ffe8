"""Exact half-integers, stored as twice their value."""

import fractions
import functools
import re
import typing

import attr

from ._error import ParseError
from ._validation import type_validator

_HALF = re.compile(r"^\s*(-?)(\d+)(/2)?\s*$")


@functools.total_ordering
@attr.s(frozen=True, eq=False, order=False, repr=False, slots=True)
class HalfInt:
    doubled = attr.ib(type=int, validator=type_validator())

    @classmethod
    def of(cls, value: typing.Union["HalfInt", int, fractions.Fraction]):
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, fractions.Fraction):
            doubled = value * 2
            if doubled.denominator != 1:
                raise ValueError("{} is not a half-integer".format(value))
            return cls(int(doubled))
        return cls(2 * value)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        match = _HALF.match(text)
        if match is None:
            raise ParseError(text, 0, ("integer", "integer/2"))
        sign, digits, half = match.groups()
        doubled = int(digits) if half else 2 * int(digits)
        return cls(-doubled if sign else doubled)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def floor(self) -> int:
        return self.doubled // 2

    def ceil(self) -> int:
        return -((-self.doubled) // 2)

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError("{} is not an integer".format(self))
        return self.doubled // 2

    def as_fraction(self) -> fractions.Fraction:
        return fractions.Fraction(self.doubled, 2)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(other.doubled - self.doubled)

    def __mul__(self, other):
        if isinstance(other, bool) or not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.doubled * other)

    __rmul__ = __mul__

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __abs__(self):
        return HalfInt(abs(self.doubled))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.doubled == other.doubled

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.doubled < other.doubled

    def __hash__(self):
        return hash(fractions.Fraction(self.doubled, 2))

    def __str__(self):
        if self.is_integer:
            return str(self.doubled // 2)
        return "{}/2".format(self.doubled)

    def __repr__(self):
        return "HalfInt({})".format(self)


def _coerce(value):
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    return None


def half(value) -> HalfInt:
    """Build a half-integer from an int, a Fraction or its text form."""
    if isinstance(value, str):
        return HalfInt.parse(value)
    return HalfInt.of(value)


ZERO = HalfInt(0)

"""Exact rational densities compared by integer cross-multiplication."""

from __future__ import annotations

import numbers
from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Convert a threshold given as int, Fraction, Density, float or string
    ("3", "2.5", "7/2") into an exact Fraction.

    Floats go through their shortest decimal repr, so ``2.5`` and ``0.1``
    mean what they look like rather than their binary expansion.
    """
    if isinstance(value, Density):
        return Fraction(value.sum, value.len)
    if isinstance(value, bool):
        raise TypeError("threshold must be numeric, not bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"threshold must be finite, got {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as an exact rational") from exc
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Real):
        return as_fraction(float(value))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational threshold")


def _pair(other):
    if isinstance(other, Density):
        return other.sum, other.len
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        f = Fraction(other)
        return f.numerator, f.denominator
    return None


class Density:
    """Average degree over a window: ``sum`` total degree over ``len`` timestamps.

    The pair is kept unreduced so it still names the witnessing window's
    totals. Ordering, equality and hashing follow the rational value, so
    ``Density(14, 4) == Density(7, 2) == Fraction(7, 2)``.
    """

    __slots__ = ("sum", "len")

    def __init__(self, sum: int, len: int):
        if type(sum) is int and type(len) is int and len >= 1 and sum >= 0:
            self.sum = sum
            self.len = len
            return
        if not isinstance(sum, numbers.Integral) or not isinstance(len, numbers.Integral):
            raise TypeError("Density fields must be integers")
        if len < 1:
            raise ValueError(f"Density length must be >= 1, got {len}")
        if sum < 0:
            raise ValueError(f"Density sum must be >= 0, got {sum}")
        self.sum = int(sum)
        self.len = int(len)

    @property
    def value(self) -> Fraction:
        return Fraction(self.sum, self.len)

    def __float__(self) -> float:
        return self.sum / self.len

    def __repr__(self) -> str:
        return f"Density({self.sum}, {self.len})"

    def __str__(self) -> str:
        return f"{self.sum}/{self.len}"

    def _cmp(self, other):
        p = _pair(other)
        if p is None:
            return None
        return self.sum * p[1] - p[0] * self.len

    def __eq__(self, other):
        d = self._cmp(other)
        return NotImplemented if d is None else d == 0

    def __lt__(self, other):
        d = self._cmp(other)
        return NotImplemented if d is None else d < 0

    def __le__(self, other):
        d = self._cmp(other)
        return NotImplemented if d is None else d <= 0

    def __gt__(self, other):
        d = self._cmp(other)
        return NotImplemented if d is None else d > 0

    def __ge__(self, other):
        d = self._cmp(other)
        return NotImplemented if d is None else d >= 0

    def __hash__(self):
        return hash(Fraction(self.sum, self.len))

    def to_json(self) -> dict:
        return {"num": self.sum, "den": self.len}

    @classmethod
    def from_json(cls, obj: dict) -> "Density":
        return cls(int(obj["num"]), int(obj["den"]))


def fraction_to_json(value) -> dict:
    """Serialize a Density or rational threshold as ``{"num", "den"}``."""
    if isinstance(value, Density):
        return value.to_json()
    f = as_fraction(value)
    return {"num": f.numerator, "den": f.denominator}

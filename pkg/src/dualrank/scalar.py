"""Exact rational scalars and dual scalars.

Rationals are :class:`fractions.Fraction`, which already keeps the
canonical form we need (positive denominator, reduced, zero as ``0/1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DualRankError, ParseError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``.

    >>> rat(3, -9)
    Fraction(-1, 3)
    """
    if den == 0:
        raise DualRankError("zero denominator")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (base 10, sign on the numerator only)."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or literal string; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class DualScalar:
    """``real + eps*dual`` with ``eps**2 == 0``."""

    real: Fraction
    dual: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "real", as_rational(self.real))
        object.__setattr__(self, "dual", as_rational(self.dual))

    def __add__(self, other: DualScalar) -> DualScalar:
        other = _lift(other)
        return DualScalar(self.real + other.real, self.dual + other.dual)

    __radd__ = __add__

    def __neg__(self) -> DualScalar:
        return DualScalar(-self.real, -self.dual)

    def __sub__(self, other: DualScalar) -> DualScalar:
        return self + (-_lift(other))

    def __rsub__(self, other) -> DualScalar:
        return _lift(other) - self

    def __mul__(self, other: DualScalar) -> DualScalar:
        return dual_mul(self, _lift(other))

    __rmul__ = __mul__

    def inverse(self) -> DualScalar:
        if self.real == 0:
            raise DualRankError("dual scalar with zero real part has no inverse")
        inv = 1 / self.real
        return DualScalar(inv, -self.dual * inv * inv)

    def __truediv__(self, other: DualScalar) -> DualScalar:
        return self * _lift(other).inverse()

    def __str__(self) -> str:
        return f"{format_rational(self.real)}+eps*{format_rational(self.dual)}"


def _lift(x) -> DualScalar:
    if isinstance(x, DualScalar):
        return x
    return DualScalar(as_rational(x))


def dual_mul(a: DualScalar, b: DualScalar) -> DualScalar:
    """Product of dual scalars; the ``eps**2`` term is dropped."""
    return DualScalar(a.real * b.real, a.real * b.dual + a.dual * b.real)

"""
Exact scalars: rationals and roots of unity with rational angle.

Rationals are plain :class:`fractions.Fraction` values.  A root of unity
``exp(2*pi*i*t)`` is stored by its angle ``t`` reduced into ``[0, 1)``, so
multiplication is addition of angles and equality is equality of reduced
fractions.

>>> cyc_from_angle(Fraction(3, 2))
CyclotomicUnit(angle=Fraction(1, 2))
>>> cyc_pow(cyc_from_angle(Fraction(1, 6)), 4).angle
Fraction(2, 3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import ParseError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction; floats are refused so nothing is ever rounded."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``.  Decimal notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not an exact rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_rational_list(text: str) -> list[Fraction]:
    if not text.strip():
        raise ParseError("empty rational list")
    return [parse_rational(part) for part in text.split(",")]


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_rational_list(values: Iterable[RationalLike]) -> str:
    return ",".join(format_rational(v) for v in values)


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1


@dataclass(frozen=True)
class CyclotomicUnit:
    """The complex number ``exp(2*pi*i*angle)`` with ``0 <= angle < 1``."""

    angle: Fraction

    def __post_init__(self):
        a = as_rational(self.angle)
        object.__setattr__(self, "angle", a - (a.numerator // a.denominator))

    def __mul__(self, other: CyclotomicUnit) -> CyclotomicUnit:
        if not isinstance(other, CyclotomicUnit):
            return NotImplemented
        return CyclotomicUnit(self.angle + other.angle)

    def __pow__(self, k: int) -> CyclotomicUnit:
        return CyclotomicUnit(self.angle * k)

    def inverse(self) -> CyclotomicUnit:
        return CyclotomicUnit(-self.angle)

    def __truediv__(self, other: CyclotomicUnit) -> CyclotomicUnit:
        return self * other.inverse()

    def __neg__(self) -> CyclotomicUnit:
        return CyclotomicUnit(self.angle + Fraction(1, 2))

    @property
    def order(self) -> int:
        """Multiplicative order; the denominator of the reduced angle."""
        return self.angle.denominator

    def is_one(self) -> bool:
        return self.angle == 0

    def __str__(self) -> str:
        if self.angle == 0:
            return "1"
        if self.angle == Fraction(1, 2):
            return "-1"
        return f"exp(2pi*i*{format_rational(self.angle)})"

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        import cmath
        return cmath.exp(2j * cmath.pi * float(self.angle))


ONE = CyclotomicUnit(Fraction(0))
MINUS_ONE = CyclotomicUnit(Fraction(1, 2))


def cyc_from_angle(t: RationalLike) -> CyclotomicUnit:
    return CyclotomicUnit(as_rational(t))


def cyc_mul(a: CyclotomicUnit, b: CyclotomicUnit) -> CyclotomicUnit:
    return a * b


def cyc_pow(a: CyclotomicUnit, k: int) -> CyclotomicUnit:
    return a ** k


def parse_unit(text: str) -> CyclotomicUnit:
    """Accept ``1``, ``-1`` or ``exp(2pi*i*a/b)`` as printed by ``str``."""
    s = text.strip()
    if s == "1":
        return ONE
    if s == "-1":
        return MINUS_ONE
    m = re.match(r"^exp\(2pi\*i\*(.+)\)$", s)
    if not m:
        raise ParseError(f"not a root of unity: {text!r}")
    return cyc_from_angle(parse_rational(m.group(1)))

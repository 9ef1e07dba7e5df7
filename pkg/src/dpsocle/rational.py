"""Exact rational helpers: parsing, integrality tests and "p/q" serialization."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInput

RationalLike = Union[int, Fraction, str]


def to_fraction(x: RationalLike) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise InvalidInput(f"not a rational number: {x!r}")
    if isinstance(x, float):
        # floats are rejected on purpose: half-integers must stay exact
        raise InvalidInput(f"floats are not accepted, use 'p/q' strings: {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"not a rational number: {x!r}") from exc


def fractions(xs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in xs)


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1


def fmt(x: Fraction | int) -> str:
    """Serialize ``x`` as ``"p"`` or ``"p/q"``.

    >>> fmt(Fraction(3, 2)), fmt(Fraction(-4, 2)), fmt(0)
    ('3/2', '-2', '0')
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_seq(xs: Iterable[Fraction | int]) -> list[str]:
    return [fmt(x) for x in xs]

"""Exact rational scalars.

The whole library computes decompositions and weights in exact arithmetic;
``fractions.Fraction`` is the carrier.  This module holds the parsing and
guard helpers shared by every other module: fractions arrive as ``"p/q"``
strings, ints, or ``Fraction`` instances, never as binary floats (a float
position would silently break exact-equality invariants downstream).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import DomainError

Rat = Fraction

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce an exact rational-like value to ``Fraction``.

    Accepts ``Fraction``, ``int``, and strings such as ``"1/3"``, ``"-2"``,
    or ``"0.25"`` (decimal strings are exact).  Binary floats are rejected:
    callers that start from floats must convert explicitly and own the
    rounding decision.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("not_rational", f"bool is not a rational scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError("not_rational", f"cannot parse {value!r}: {exc}") from None
    raise DomainError("not_rational", f"expected exact rational, got {type(value).__name__}: {value!r}")


def rat_str(value: Fraction) -> str:
    """Canonical string form of a reduced fraction ("2", "-1/3", ...)."""
    return str(value)

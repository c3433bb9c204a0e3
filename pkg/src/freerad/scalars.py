"""Scalar backend helpers.

Every numeric routine in this package accepts either machine floats or
exact rationals (``fractions.Fraction``; plain ints count as exact).  The
helpers here decide which backend an input lives in, validate floats, and
take exact square roots where they exist.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import BadInput, ExactnessError

Scalar = Union[int, float, Fraction]


def is_exact(x: Scalar) -> bool:
    """True when ``x`` belongs to the exact rational backend."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def as_float(x: Scalar) -> float:
    f = float(x)
    if not math.isfinite(f):
        raise BadInput(f"non-finite scalar: {x!r}")
    return f


def coerce(x: Scalar) -> Scalar:
    """Normalize to Fraction (exact backend) or a validated float."""
    if is_exact(x):
        return Fraction(x)
    return as_float(x)


def isqrt_exact(n: int) -> int | None:
    """Integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(x: Fraction) -> Fraction:
    """Exact square root of a rational, or ExactnessError if irrational."""
    x = Fraction(x)
    if x < 0:
        raise BadInput(f"square root of negative rational: {x}")
    num = isqrt_exact(x.numerator)
    den = isqrt_exact(x.denominator)
    if num is None or den is None:
        raise ExactnessError(f"sqrt({x}) is irrational")
    return Fraction(num, den)

"""Scalar regime helpers shared across the package.

Two scalar regimes are supported everywhere: IEEE doubles for numeric work
and arbitrary-precision rationals (`int` / `fractions.Fraction`) for exact
work.  Nothing in the package converts implicitly between the two; callers
pick a regime by the scalars they pass in, and the helpers here classify
values and serialize them in a stable way.  Non-integer rationals travel
through JSON as "p/q" strings.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

Number = int | float | Fraction


def is_exact(value) -> bool:
    """True for scalars that carry no rounding error (int or Fraction)."""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def all_exact(values) -> bool:
    return all(is_exact(v) for v in values)


def parse_number(text: str, exact: bool) -> Number:
    """Parse "7", "-3/4" or "0.25" into the requested regime.

    Fraction accepts both rational and terminating-decimal literals, so the
    exact regime converts decimal text without rounding.
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {text!r}") from exc
    if not exact:
        return float(value)
    return value.numerator if value.denominator == 1 else value


def coerce_json_number(value, exact: bool) -> Number:
    """Normalize a decoded JSON scalar (number or "p/q" string)."""
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, str):
        return parse_number(value, exact)
    if isinstance(value, (int, Fraction)):
        if exact:
            return value
        return float(value)
    if isinstance(value, float):
        if exact:
            frac = Fraction(value)
            return frac.numerator if frac.denominator == 1 else frac
        return value
    raise ValueError(f"not a number: {value!r}")


def format_number(value: Number):
    """Render a scalar as a JSON-ready value (int, float, or "p/q")."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return value
    return value


def loads_with_exact_numbers(text: str, exact: bool):
    """json.loads with decimal literals kept exact in the exact regime.

    The parse_float hook sees the raw literal text, so "0.1" becomes the
    rational 1/10 instead of the nearest double.
    """
    if exact:
        return json.loads(text, parse_float=Fraction)
    return json.loads(text)


def exact_sqrt(value):
    """Square root of a nonnegative int/Fraction, or None if irrational."""
    frac = Fraction(value)
    if frac < 0:
        raise ValueError("square root of a negative value")
    num_root = math.isqrt(frac.numerator)
    den_root = math.isqrt(frac.denominator)
    if num_root * num_root != frac.numerator:
        return None
    if den_root * den_root != frac.denominator:
        return None
    root = Fraction(num_root, den_root)
    return root.numerator if root.denominator == 1 else root

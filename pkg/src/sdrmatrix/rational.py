"""Exact scalars: parsing and rendering of rational literals.

Entries are plain :class:`fractions.Fraction` values; this module only
fixes the literal syntax shared by specs, JSON files and the CLI.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``'3'``, ``'-2/5'`` or an int into a canonical Fraction.

    Denominators must be positive; floats are rejected since they are not exact.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational literal: {text!r}")
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

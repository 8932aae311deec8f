"""Arbitrary-precision rational scalars.

The coefficient field everywhere in this package is the rationals.  We use
:class:`fractions.Fraction`, which already maintains the canonical form we
need (reduced, positive denominator, zero stored as 0/1).  Scalars cross
module boundaries as strings "p" or "p/q" with q > 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

ExactScalar = Fraction

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/([1-9]\d*))?$")


def parse_scalar(text: str) -> Fraction:
    """Parse "p" or "p/q" (q > 0) into an exact rational.

    Raises ValueError on anything else, including "1/0" and decimal points.
    """
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string, got {type(text).__name__}")
    m = _SCALAR_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed scalar {text!r}: expected 'p' or 'p/q' with q > 0")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def format_scalar(value: Fraction) -> str:
    """Render a rational as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

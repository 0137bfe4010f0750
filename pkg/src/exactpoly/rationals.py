"""Exact rational scalars.

Every number in this package is an arbitrary-precision rational kept in
lowest terms with a positive denominator.  gmpy2's mpq provides that
representation an order of magnitude faster than fractions.Fraction; the
fallback keeps the package importable without it.
"""
from __future__ import annotations

import math
import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)

_LITERAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def rat(num, den=None):
    """Build a rational from ints, rationals, or a literal string."""
    if den is None:
        if isinstance(num, str):
            return parse_rat(num)
        return Rat(num)
    return Rat(num) / Rat(den)


def parse_rat(text):
    """Parse `[sign]int[/posint]` (e.g. "315/2", "-45"); reject anything else."""
    s = text.strip()
    if not _LITERAL.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Rat(int(num), d)
    return Rat(int(s))


def format_rat(q) -> str:
    """Canonical literal: `n` or `n/d` with d > 1."""
    n, d = q.numerator, q.denominator
    return f"{n}" if d == 1 else f"{n}/{d}"


def as_int(q) -> int:
    """The integer value of an integral rational."""
    if q.denominator != 1:
        raise ValueError(f"not an integer: {format_rat(q)}")
    return int(q.numerator)


def clear_denominators(values):
    """Scale a rational sequence by the lcm of denominators; returns ints."""
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, int(v.denominator))
    return [int(v.numerator) * (lcm // int(v.denominator)) for v in values]


def primitive_ints(values):
    """Clear denominators and divide by the gcd (sign preserved)."""
    ints = clear_denominators(values)
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return ints
    return [v // g for v in ints]

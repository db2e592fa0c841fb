"""Exact rational parsing and formatting.

All arithmetic in the package runs on fractions.Fraction (or plain int).
JSON carries rationals as strings "p/q" or "p"; bare JSON integers are
accepted on input too. Floats are rejected everywhere: a float in a point
file is a user error, not something to silently round.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameters


def parse_rational(value) -> Fraction:
    """Parse an int, or a string like "7/2", "-3", " 5 ", into a Fraction."""
    if isinstance(value, bool):
        raise BadParameters(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameters(f"not a rational: {value!r}") from exc
    raise BadParameters(f"not a rational: {value!r} (floats are not accepted)")


def format_rational(value) -> str:
    """Canonical string form, "p/q" or "p" for integers."""
    return str(Fraction(value))


def parse_rational_vector(values) -> tuple[Fraction, ...]:
    if not isinstance(values, (list, tuple)):
        raise BadParameters("expected a list of rationals")
    return tuple(parse_rational(v) for v in values)


def format_rational_vector(values) -> list[str]:
    return [format_rational(v) for v in values]

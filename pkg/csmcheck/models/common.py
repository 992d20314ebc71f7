from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer, PlainValidator, WithJsonSchema


def _parse_int(v: Any) -> int:
    """Accept JSON integers or decimal strings; reject floats and booleans."""
    if isinstance(v, bool):
        raise ValueError("booleans are not integers")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        text = v.strip()
        try:
            return int(text, 10)
        except ValueError:
            raise ValueError(f"not a decimal integer: {v!r}")
    raise ValueError(f"expected an integer or decimal string, got {type(v).__name__}")


def _parse_rational(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {v!r}")
    raise ValueError(f"expected an integer or rational string, got {type(v).__name__}")


def _to_decimal_string(v: Any) -> str:
    return str(v)


# Integers travel as decimal strings in every file and report
IntString = Annotated[int, BeforeValidator(_parse_int), PlainSerializer(_to_decimal_string, return_type=str)]

# Fraction has no core schema of its own, so validation is fully delegated
RationalString = Annotated[
    Fraction,
    PlainValidator(_parse_rational),
    PlainSerializer(_to_decimal_string, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^\s*-?\d+(/\d+)?\s*$"}),
]

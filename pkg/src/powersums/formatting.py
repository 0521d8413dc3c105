"""Scalar literals on the command line and their printed forms.

Accepted literals: integers (``-3``), rationals (``p/q``), decimals
(``0.25``, ``1e-3``), and complex numbers written ``RE+IMi`` / ``RE-IMi`` /
``IMi`` (``0+1i``, ``-2.5-0.5i``). No spaces anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Any, List, Optional

__all__ = [
    "format_float",
    "format_scalar",
    "json_scalar",
    "parse_scalar",
    "parse_sequence",
    "split_complex",
]

_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_NUM = rf"[+-]?{_UNSIGNED}"
_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(r"([+-]?\d+)/(\d+)")
_FLOAT_RE = re.compile(_NUM)
_COMPLEX_RE = re.compile(rf"({_NUM})([+-](?:{_UNSIGNED})?)i")
_IMAG_RE = re.compile(rf"([+-]?(?:{_UNSIGNED})?)i")


def parse_scalar(text: str) -> Any:
    """Parse a literal into ``int``, ``Fraction``, ``float`` or ``complex``.

    Raises ``ValueError`` on anything else.
    """
    s = text.strip()
    if _INT_RE.fullmatch(s):
        return int(s)
    m = _RAT_RE.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    if _FLOAT_RE.fullmatch(s):
        return float(s)
    m = _COMPLEX_RE.fullmatch(s)
    if m:
        im = m.group(2)
        im = float(im + "1") if im in ("+", "-") else float(im)
        return complex(float(m.group(1)), im)
    m = _IMAG_RE.fullmatch(s)
    if m:
        im = m.group(1)
        if im in ("", "+", "-"):
            im += "1"
        return complex(0.0, float(im))
    raise ValueError(f"not a number literal: {text!r}")


def parse_sequence(text: str) -> List[Any]:
    """Comma-separated literals, e.g. ``1,-1,1/2``."""
    if not text.strip():
        raise ValueError("empty sequence literal")
    return [parse_scalar(part) for part in text.split(",")]


def format_float(value: float, precision: int = 6) -> str:
    if value == 0:
        return "0"
    if not math.isfinite(value):
        return str(value)
    return f"{value:.{precision}g}"


def format_scalar(value: Any, precision: int = 6) -> str:
    """Text form: ``p/q`` for rationals, ``a+bi`` for complex numbers."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, complex):
        re_s = format_float(value.real, precision)
        im = value.imag
        sign = "-" if im < 0 else "+"
        return f"{re_s}{sign}{format_float(abs(im), precision)}i"
    return format_float(float(value), precision)


def split_complex(value: Any) -> tuple:
    """``(re, im)`` for CSV columns; rationals keep their exact ``p/q`` text."""
    if isinstance(value, (int, Fraction)):
        return str(value), "0"
    z = complex(value)
    return repr(z.real), repr(z.imag)


def json_scalar(value: Any) -> Any:
    """JSON-ready value: rationals as ``"p/q"``, complex as ``{"re", "im"}``."""
    if value is None or isinstance(value, (bool, int)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return {"re": _finite_or_none(value.real), "im": _finite_or_none(value.imag)}
    if isinstance(value, float):
        return _finite_or_none(value)
    if isinstance(value, (list, tuple)):
        return [json_scalar(v) for v in value]
    return str(value)


def _finite_or_none(v: float) -> Optional[float]:
    return v if math.isfinite(v) else None

"""Evaluation contexts: the three arithmetic regimes every evaluator runs in.

A context knows how to lift an input into its native scalar type, how to
raise a positive integer to a (possibly complex) power, how to add up a batch
of terms, and how to turn a native value back into a public result.

``exact``
    :class:`fractions.Fraction`; integer exponents only.
``standard``
    binary64 ``complex``; batch sums go through :func:`math.fsum` on the real
    and imaginary parts, so cancellation in alternating sums only costs the
    rounding already present in the individual terms.
``extended``
    complex numbers from a private :mod:`mpmath` context carrying 113 bits
    of significand (more than twice binary64). Results are rounded to
    ``complex`` only when handed back to the caller.

Contexts are immutable and hold no shared mutable state, so one instance
can be used from any number of threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Complex, Rational
from typing import Any, Iterable, Optional, Union

import mpmath

from .errors import InvalidParams, NonFiniteResult

__all__ = [
    "EXACT",
    "EXTENDED",
    "STANDARD",
    "Context",
    "ExactContext",
    "ExtendedContext",
    "StandardContext",
    "get_context",
    "is_rational",
    "resolve_context",
]

EXTENDED_PRECISION_BITS = 113


def is_rational(value: Any) -> bool:
    """True for ints and Fractions (bools excluded)."""
    return isinstance(value, Rational) and not isinstance(value, bool)


def _as_integer(value: Any) -> Optional[int]:
    if is_rational(value) and Fraction(value).denominator == 1:
        return int(value)
    return None


@dataclass(frozen=True)
class ExactContext:
    mode: str = field(default="exact", init=False)

    def scalar(self, value: Any) -> Fraction:
        if not is_rational(value):
            raise InvalidParams(f"exact mode needs rational input, got {value!r}")
        return Fraction(value)

    def power(self, base: int, exponent: Any) -> Fraction:
        n = _as_integer(exponent)
        if n is None:
            raise InvalidParams(f"exact mode needs an integer exponent, got {exponent!r}")
        return Fraction(base) ** n

    def total(self, terms: Iterable[Fraction]) -> Fraction:
        return sum(terms, Fraction(0))

    def result(self, value: Fraction) -> Fraction:
        return Fraction(value)


@dataclass(frozen=True)
class StandardContext:
    mode: str = field(default="standard", init=False)

    def scalar(self, value: Any) -> complex:
        if isinstance(value, Fraction):
            value = float(value)
        try:
            z = complex(value)
        except (TypeError, ValueError) as exc:
            raise InvalidParams(f"not a scalar: {value!r}") from exc
        if not cmath.isfinite(z):
            raise NonFiniteResult(f"non-finite input {value!r}")
        return z

    def power(self, base: int, exponent: Any) -> complex:
        if base == 1:
            return 1 + 0j
        try:
            z = cmath.exp(self.scalar(exponent) * math.log(base))
        except OverflowError as exc:
            raise NonFiniteResult(f"{base}**{exponent!r} overflows binary64") from exc
        if not cmath.isfinite(z):
            raise NonFiniteResult(f"{base}**{exponent!r} is not finite")
        return z

    def total(self, terms: Iterable[complex]) -> complex:
        terms = list(terms)
        try:
            s = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
        except OverflowError as exc:
            raise NonFiniteResult("intermediate overflow in summation") from exc
        if not cmath.isfinite(s):
            raise NonFiniteResult("summation produced a non-finite value")
        return s

    def result(self, value: Any) -> complex:
        z = complex(value)
        if not cmath.isfinite(z):
            raise NonFiniteResult(f"non-finite result {z!r}")
        return z


@dataclass(frozen=True)
class ExtendedContext:
    prec: int = EXTENDED_PRECISION_BITS
    mode: str = field(default="extended", init=False)
    mp: Any = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ctx = mpmath.MPContext()
        ctx.prec = self.prec
        object.__setattr__(self, "mp", ctx)

    def scalar(self, value: Any):
        mp = self.mp
        if isinstance(value, Fraction):
            return mp.mpc(mp.mpf(value.numerator) / value.denominator)
        if isinstance(value, (mpmath.mpf, mpmath.mpc)) or isinstance(value, Complex):
            z = mp.mpc(value)
            if not mp.isfinite(z):
                raise NonFiniteResult(f"non-finite input {value!r}")
            return z
        raise InvalidParams(f"not a scalar: {value!r}")

    def power(self, base: int, exponent: Any):
        mp = self.mp
        if base == 1:
            return mp.mpc(1)
        return mp.exp(self.scalar(exponent) * mp.log(base))

    def total(self, terms: Iterable[Any]):
        return self.mp.fsum(terms)

    def result(self, value: Any) -> complex:
        z = complex(value)
        if not cmath.isfinite(z):
            raise NonFiniteResult(f"result {value} does not fit in binary64")
        return z


Context = Union[ExactContext, StandardContext, ExtendedContext]

EXACT = ExactContext()
STANDARD = StandardContext()
EXTENDED = ExtendedContext()

_ALIASES = {
    "exact": EXACT,
    "standard": STANDARD,
    "float-standard": STANDARD,
    "extended": EXTENDED,
    "float-extended": EXTENDED,
}


def get_context(mode: Union[str, Context]) -> Context:
    if isinstance(mode, (ExactContext, StandardContext, ExtendedContext)):
        return mode
    try:
        return _ALIASES[mode]
    except KeyError:
        raise InvalidParams(f"unknown arithmetic mode {mode!r}") from None


def resolve_context(mode: Union[str, Context, None], *values: Any) -> Context:
    """Pick a context: an explicit ``mode`` wins, otherwise exact iff every value is rational.

    ``None`` entries in ``values`` are ignored.
    """
    if mode is not None and mode != "auto":
        return get_context(mode)
    if all(v is None or is_rational(v) for v in values):
        return EXACT
    return STANDARD

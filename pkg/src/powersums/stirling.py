"""Stirling functions of the second kind, the binomial transform pair and
the upper-summation kernels.

The Stirling function is the finite alternating sum

    S(alpha, k) = (1/k!) * sum_{j=1}^{k} (-1)^(k-j) C(k, j) j^alpha

for complex ``alpha`` and positive integer ``k``, with ``j^alpha`` taken as
``exp(alpha * ln j)`` using the real logarithm of ``j``. Because the sum is
exactly the binomial transform of ``(j^alpha)_{j>=1}``, the scaled values
``k! S(alpha, k)`` are computed by :func:`binomial_transform`.

Arithmetic is selected by ``mode`` (``"exact"``, ``"standard"``,
``"extended"`` or a context object from :mod:`powersums.arithmetic`).
Leaving ``mode=None`` picks exact arithmetic when every input is rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Any, List, Sequence

from .arithmetic import Context, resolve_context
from .combinatorics import harmonic, stirling1_unsigned
from .errors import InvalidParams

__all__ = [
    "binomial_transform",
    "binomial_transform_inverse",
    "scaled_stirling_values",
    "sigma_polynomial",
    "sigma_polynomial_factored",
    "stirling_function",
    "stirling_function_exact",
    "stirling_values",
    "upper_sum_binomial",
    "upper_sum_harmonic",
    "upper_sum_reciprocal",
    "upper_sum_stirling1",
    "weighted_binomial_sum_closed",
]


def _check_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidParams(f"{name} must be a positive integer, got {value!r}")


def _check_window(m: int, j: int) -> None:
    _check_positive("m", m)
    _check_positive("j", j)
    if j > m:
        raise InvalidParams(f"need 1 <= j <= m, got j={j}, m={m}")


# -- binomial transform ------------------------------------------------------

def _forward(a: Sequence[Any], ctx: Context) -> List[Any]:
    out = []
    for k in range(1, len(a) + 1):
        out.append(ctx.total((-1) ** (k - j) * comb(k, j) * a[j - 1] for j in range(1, k + 1)))
    return out


def _inverse(b: Sequence[Any], ctx: Context) -> List[Any]:
    out = []
    for k in range(1, len(b) + 1):
        out.append(ctx.total(comb(k, j) * b[j - 1] for j in range(1, k + 1)))
    return out


def _lift(seq: Sequence[Any], mode) -> tuple:
    if len(seq) == 0:
        raise InvalidParams("sequence must be non-empty")
    ctx = resolve_context(mode, *seq)
    return ctx, [ctx.scalar(v) for v in seq]


def binomial_transform(a: Sequence[Any], mode=None) -> List[Any]:
    """b_k = sum_{j=1}^{k} (-1)^(k-j) C(k, j) a_j, for k = 1..len(a).

    Entry 0 of the input and output corresponds to index 1. Results are the
    context's native scalars: ``Fraction`` when exact, ``complex`` in
    standard mode and an mpmath complex in extended mode, so that chained
    transforms keep the extra precision.
    """
    ctx, a = _lift(a, mode)
    return _forward(a, ctx)


def binomial_transform_inverse(b: Sequence[Any], mode=None) -> List[Any]:
    """a_k = sum_{j=1}^{k} C(k, j) b_j; undoes :func:`binomial_transform`."""
    ctx, b = _lift(b, mode)
    return _inverse(b, ctx)


# -- Stirling functions ------------------------------------------------------

def _div(value: Any, n: int) -> Any:
    try:
        return value / n
    except OverflowError:
        # binary64 cannot hold n itself; 1/n still rounds fine
        return value * float(Fraction(1, n))


def _scaled_stirling(alpha: Any, m: int, ctx: Context) -> List[Any]:
    # [j! S(alpha, j) for j = 1..m] in native scalars
    powers = [ctx.power(j, alpha) for j in range(1, m + 1)]
    return _forward(powers, ctx)


def scaled_stirling_values(alpha: Any, m: int, mode=None) -> List[Any]:
    """``[j! * S(alpha, j) for j in 1..m]`` as public results of the context."""
    _check_positive("m", m)
    ctx = resolve_context(mode, alpha)
    return [ctx.result(v) for v in _scaled_stirling(alpha, m, ctx)]


def stirling_values(alpha: Any, m: int, mode=None) -> List[Any]:
    """``[S(alpha, j) for j in 1..m]``."""
    _check_positive("m", m)
    ctx = resolve_context(mode, alpha)
    scaled = _scaled_stirling(alpha, m, ctx)
    return [ctx.result(_div(v, factorial(j))) for j, v in enumerate(scaled, start=1)]


def stirling_function(alpha: Any, k: int, mode="standard") -> Any:
    """Stirling function of the second kind S(alpha, k) for complex ``alpha``.

    ``alpha = 0`` is accepted even though the classical setting excludes it;
    the sum is perfectly well defined there and equals ``(-1)^(k+1)/k!``.

    Raises :class:`~powersums.errors.NonFiniteResult` when ``k^alpha`` does
    not fit in binary64.
    """
    _check_positive("k", k)
    ctx = resolve_context(mode, alpha)
    return ctx.result(_div(_scaled_stirling(alpha, k, ctx)[-1], factorial(k)))


def stirling_function_exact(alpha: int, k: int) -> Fraction:
    """Exact rational S(alpha, k) for integer ``alpha`` (negative allowed)."""
    if isinstance(alpha, bool) or not isinstance(alpha, int):
        raise InvalidParams(f"alpha must be an int, got {alpha!r}")
    return stirling_function(alpha, k, mode="exact")


# -- upper summation kernels -------------------------------------------------

def _sigma(x: Any, m: int, j: int, ctx: Context) -> Any:
    return ctx.total(comb(k, j) * x ** k for k in range(j, m + 1))


def _sigma_factored(x: Any, m: int, j: int, ctx: Context) -> Any:
    return x ** j * ctx.total(comb(r + j, j) * x ** r for r in range(m - j + 1))


def sigma_polynomial(x: Any, m: int, j: int, mode=None) -> Any:
    """sum_{k=j}^{m} C(k, j) x^k."""
    _check_window(m, j)
    ctx = resolve_context(mode, x)
    return ctx.result(_sigma(ctx.scalar(x), m, j, ctx))


def sigma_polynomial_factored(x: Any, m: int, j: int, mode=None) -> Any:
    """The same polynomial written as x^j * sum_{r=0}^{m-j} C(r+j, j) x^r."""
    _check_window(m, j)
    ctx = resolve_context(mode, x)
    return ctx.result(_sigma_factored(ctx.scalar(x), m, j, ctx))


def upper_sum_binomial(m: int, j: int) -> int:
    """sum_{k=j}^{m} C(k, j) = C(m+1, j+1)."""
    _check_window(m, j)
    return comb(m + 1, j + 1)


def _weighted_closed(x: Any, m: int, j: int) -> Any:
    return comb(m, j) * x ** j * (1 + x) ** (m - j)


def weighted_binomial_sum_closed(x: Any, m: int, j: int, mode=None) -> Any:
    """C(m, j) x^j (1+x)^(m-j), the closed form of sum_{k=j}^{m} C(m,k) C(k,j) x^k."""
    _check_window(m, j)
    ctx = resolve_context(mode, x)
    return ctx.result(_weighted_closed(ctx.scalar(x), m, j))


def upper_sum_stirling1(m: int, j: int) -> int:
    """sum_{k=j}^{m} C(k, j) c(m, k) = c(m+1, j+1), c the unsigned first-kind numbers."""
    _check_window(m, j)
    return stirling1_unsigned(m + 1, j + 1)


def upper_sum_harmonic(m: int, j: int) -> Fraction:
    """sum_{k=j}^{m} C(k, j) H_k = C(m+1, j+1) (H_{m+1} - 1/(j+1))."""
    _check_window(m, j)
    return comb(m + 1, j + 1) * (harmonic(m + 1) - Fraction(1, j + 1))


def upper_sum_reciprocal(m: int, j: int) -> Fraction:
    """sum_{k=j}^{m} C(k, j)/(m-k+1) = C(m+1, j) (H_{m+1} - H_j)."""
    _check_window(m, j)
    return comb(m + 1, j) * (harmonic(m + 1) - harmonic(j))

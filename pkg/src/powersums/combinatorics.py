"""Exact integer and rational combinatorial kernels.

Everything here is exact: Python ``int`` for the counting numbers and
:class:`fractions.Fraction` for harmonic numbers. The triangular tables
(Stirling numbers of both kinds, Eulerian numbers) are built row by row
and memoized behind a lock, so all public functions are safe to call from
several threads.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

__all__ = [
    "EulerianPolynomial",
    "binomial",
    "eulerian_polynomial",
    "factorial",
    "harmonic",
    "harmonic_numbers",
    "stirling1_unsigned",
    "stirling2_exact",
]


def _require_int(name: str, value: int, minimum: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


def binomial(n: int, k: int) -> int:
    """C(n, k) for non-negative integers; 0 when k > n."""
    _require_int("n", n, 0)
    _require_int("k", k, 0)
    return math.comb(n, k)


def factorial(n: int) -> int:
    _require_int("n", n, 0)
    return math.factorial(n)


class _Triangle:
    """Lazily grown table of rows ``T[0], T[1], ...`` of a triangular recurrence.

    ``step(n, prev)`` receives the row index ``n`` and row ``n - 1`` and must
    return row ``n``. Rows are tuples, so handing them out is safe.
    """

    def __init__(self, first: Tuple[int, ...], step: Callable[[int, Tuple[int, ...]], Tuple[int, ...]]):
        self._rows: List[Tuple[int, ...]] = [first]
        self._step = step
        self._lock = threading.Lock()

    def row(self, n: int) -> Tuple[int, ...]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                rows.append(self._step(len(rows), rows[-1]))
            return rows[n]


def _stirling2_step(n: int, prev: Tuple[int, ...]) -> Tuple[int, ...]:
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
    return tuple(row)


def _stirling1_step(n: int, prev: Tuple[int, ...]) -> Tuple[int, ...]:
    # c(n, k) = (n-1) c(n-1, k) + c(n-1, k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = ((n - 1) * prev[k] if k < n else 0) + prev[k - 1]
    return tuple(row)


def _eulerian_step(n: int, prev: Tuple[int, ...]) -> Tuple[int, ...]:
    # Coefficients of A_n(x) = sum_{k=1}^{n} A(n, k) x^k, with
    # A(n, k) = k A(n-1, k) + (n - k + 1) A(n-1, k-1).
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + (n - k + 1) * prev[k - 1]
    return tuple(row)


_STIRLING2 = _Triangle((1,), _stirling2_step)
_STIRLING1 = _Triangle((1,), _stirling1_step)
_EULERIAN = _Triangle((1,), _eulerian_step)


def stirling2_exact(n: int, k: int) -> int:
    """Classical Stirling number of the second kind S(n, k)."""
    _require_int("n", n, 1)
    _require_int("k", k, 1)
    if k > n:
        return 0
    return _STIRLING2.row(n)[k]


def stirling1_unsigned(m: int, k: int) -> int:
    """Number of permutations of ``m`` elements with exactly ``k`` cycles."""
    _require_int("m", m, 1)
    _require_int("k", k, 1)
    if k > m:
        return 0
    return _STIRLING1.row(m)[k]


@dataclass(frozen=True)
class EulerianPolynomial:
    """Exact coefficients of the Eulerian polynomial A_n(x).

    ``coefficients[i]`` is the coefficient of ``x**i``. With this convention
    ``A_0 = 1`` and ``A_n(0) = 0`` for ``n >= 1``.
    """

    degree: int
    coefficients: Tuple[int, ...]

    def __call__(self, x):
        """Evaluate at ``x`` by Horner's rule, in whatever arithmetic ``x`` carries."""
        acc = 0 * x
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


def eulerian_polynomial(n: int) -> EulerianPolynomial:
    """Eulerian polynomial A_n(x), the numerator of ``(x d/dx)^n 1/(1-x)``."""
    _require_int("n", n, 0)
    return EulerianPolynomial(n, _EULERIAN.row(n))


_harmonic_lock = threading.Lock()
_harmonic_cache: List[Fraction] = [Fraction(0)]


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k as a reduced fraction."""
    _require_int("k", k, 1)
    cache = _harmonic_cache
    if k < len(cache):
        return cache[k]
    with _harmonic_lock:
        while len(cache) <= k:
            cache.append(cache[-1] + Fraction(1, len(cache)))
        return cache[k]


def harmonic_numbers(k: int) -> Sequence[Fraction]:
    """``[H_0, H_1, ..., H_k]`` with ``H_0 = 0``."""
    _require_int("k", k, 0)
    if k:
        harmonic(k)
    return tuple(_harmonic_cache[: k + 1])

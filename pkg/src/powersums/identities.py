"""Power-sum identities: direct left-hand sides, Stirling-function right-hand
sides, and a checker that compares the two.

Every right-hand side has the shape

    sum_{j=1}^{m} j! S(alpha, j) * K(m, j)

where ``K`` is an upper-summation kernel ``sum_{k=j}^{m} C(k, j) c_k`` for a
particular weight sequence ``c_k``. :func:`lemma_rhs` evaluates the kernel
by brute force for arbitrary coefficients; the ``rhs_eq*`` functions plug in
the closed forms. Two further right-hand sides are not of this shape and
only exist for integer exponents: :func:`rhs_eq16` (Eulerian polynomials)
and :func:`rhs_eq19` (a finite-difference form of the binomial-weighted sum).

All evaluators take ``mode`` like :mod:`powersums.stirling`, and return
``Fraction`` in exact mode, ``complex`` otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .arithmetic import EXACT, Context, get_context, is_rational, resolve_context
from .combinatorics import eulerian_polynomial, harmonic, stirling1_unsigned
from .errors import InvalidParams, SingularPoint
from .stirling import (
    _scaled_stirling,
    _sigma,
    _weighted_closed,
    upper_sum_binomial,
    upper_sum_harmonic,
    upper_sum_reciprocal,
    upper_sum_stirling1,
)

__all__ = [
    "DEFAULT_TOL",
    "EXACT_SUITE",
    "FLOAT_SUITE",
    "IdentityId",
    "IdentityParams",
    "IdentityReport",
    "Weight",
    "lemma_rhs",
    "power_sum_direct",
    "rhs_eq6",
    "rhs_eq8",
    "rhs_eq13",
    "rhs_eq16",
    "rhs_eq17",
    "rhs_eq19",
    "rhs_eq20",
    "rhs_eq23",
    "rhs_eq24",
    "verify_identity",
]

DEFAULT_TOL = {"exact": 0.0, "standard": 1e-7, "extended": 1e-10}
SINGULAR_GUARD = 1e-12
# below this |lhs| the pass test falls back to absolute error
TINY_LHS = 1e-12


class IdentityId(str, enum.Enum):
    LEMMA4 = "LEMMA4"
    EQ6 = "EQ6"
    EQ8 = "EQ8"
    EQ10 = "EQ10"
    EQ13 = "EQ13"
    EQ16 = "EQ16"
    EQ17 = "EQ17"
    EQ19 = "EQ19"
    EQ20 = "EQ20"
    EQ23 = "EQ23"
    EQ24 = "EQ24"

    def __str__(self) -> str:
        return self.value


class Weight(str, enum.Enum):
    """Weight w_k multiplying k^alpha x^k in a direct power sum."""

    NONE = "none"
    BINOMIAL = "binomial"  # C(m, k)
    STIRLING1 = "stirling1"  # c(m, k), unsigned first kind
    HARMONIC = "harmonic"  # H_k
    RECIPROCAL = "reciprocal"  # 1/(m - k + 1)


# identities that `verify all` runs with exact inputs; EQ13 is EQ6 in disguise
EXACT_SUITE: Tuple[IdentityId, ...] = (
    IdentityId.EQ6,
    IdentityId.EQ8,
    IdentityId.EQ10,
    IdentityId.EQ16,
    IdentityId.EQ17,
    IdentityId.EQ19,
    IdentityId.EQ20,
    IdentityId.EQ23,
    IdentityId.EQ24,
    IdentityId.LEMMA4,
)
# identities meaningful for complex alpha
FLOAT_SUITE: Tuple[IdentityId, ...] = (
    IdentityId.EQ6,
    IdentityId.EQ8,
    IdentityId.EQ10,
    IdentityId.EQ17,
    IdentityId.EQ20,
    IdentityId.EQ23,
    IdentityId.EQ24,
    IdentityId.LEMMA4,
)

USES_X = frozenset({IdentityId.EQ6, IdentityId.EQ13, IdentityId.EQ16, IdentityId.EQ17, IdentityId.EQ19})
INTEGER_EXPONENT = frozenset({IdentityId.EQ16, IdentityId.EQ19})


@dataclass(frozen=True)
class IdentityParams:
    """Inputs of one identity instance.

    ``alpha`` is the exponent (the integer ``n`` for EQ16 and ``r`` for EQ19),
    ``m`` the upper summation limit (the ``n`` of EQ19). ``coeffs`` is only
    used by LEMMA4.
    """

    alpha: Any
    m: int
    x: Any = None
    coeffs: Optional[Tuple[Any, ...]] = None

    def __post_init__(self) -> None:
        if self.coeffs is not None and not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    params: IdentityParams
    lhs: Any
    rhs: Any
    abs_err: float
    rel_err: float
    mode: str
    passed: bool
    tol: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": str(self.id),
            "params": {
                "alpha": self.params.alpha,
                "x": self.params.x,
                "m": self.params.m,
                "coeffs": None if self.params.coeffs is None else list(self.params.coeffs),
            },
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "mode": self.mode,
            "pass": self.passed,
            "tol": self.tol,
        }


# -- helpers -----------------------------------------------------------------

def _check_m(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidParams(f"m must be a positive integer, got {m!r}")


def _integer_exponent(value: Any, name: str, minimum: int) -> int:
    if is_rational(value) and Fraction(value).denominator == 1 and value >= minimum:
        return int(value)
    if isinstance(value, complex) and value.imag == 0 and value.real.is_integer() and value.real >= minimum:
        return int(value.real)
    if isinstance(value, float) and value.is_integer() and value >= minimum:
        return int(value)
    raise InvalidParams(f"{name} must be an integer >= {minimum}, got {value!r}")


def _weights(weight: Weight, m: int, ctx: Context) -> List[Any]:
    weight = Weight(weight)
    if weight is Weight.NONE:
        raw: List[Any] = [1] * m
    elif weight is Weight.BINOMIAL:
        raw = [comb(m, k) for k in range(1, m + 1)]
    elif weight is Weight.STIRLING1:
        raw = [stirling1_unsigned(m, k) for k in range(1, m + 1)]
    elif weight is Weight.HARMONIC:
        raw = [harmonic(k) for k in range(1, m + 1)]
    else:
        raw = [Fraction(1, m - k + 1) for k in range(1, m + 1)]
    return [ctx.scalar(w) for w in raw]


def _direct(alpha: Any, x: Any, weights: Sequence[Any], m: int, ctx: Context) -> Any:
    return ctx.total(weights[k - 1] * ctx.power(k, alpha) * x ** k for k in range(1, m + 1))


def _one(ctx: Context) -> Any:
    return ctx.scalar(1)


# -- left-hand side ----------------------------------------------------------

def power_sum_direct(alpha: Any, x: Any, weight: Weight, m: int, mode=None) -> Any:
    """sum_{k=1}^{m} w_k k^alpha x^k, term by term. ``x=None`` means 1."""
    _check_m(m)
    ctx = resolve_context(mode, alpha, x)
    xs = _one(ctx) if x is None else ctx.scalar(x)
    return ctx.result(_direct(alpha, xs, _weights(weight, m, ctx), m, ctx))


# -- right-hand sides --------------------------------------------------------

def _lemma(coeffs: Sequence[Any], alpha: Any, m: int, ctx: Context) -> Any:
    scaled = _scaled_stirling(alpha, m, ctx)
    return ctx.total(
        scaled[j - 1] * ctx.total(comb(k, j) * coeffs[k - 1] for k in range(j, m + 1))
        for j in range(1, m + 1)
    )


def lemma_rhs(coeffs: Sequence[Any], alpha: Any, m: int, mode=None) -> Any:
    """sum_j j! S(alpha, j) sum_{k=j}^{m} C(k, j) c_k for an arbitrary sequence c."""
    _check_m(m)
    if len(coeffs) < m:
        raise InvalidParams(f"need at least m={m} coefficients, got {len(coeffs)}")
    ctx = resolve_context(mode, alpha, *coeffs[:m])
    c = [ctx.scalar(v) for v in coeffs[:m]]
    return ctx.result(_lemma(c, alpha, m, ctx))


def _kernel_sum(alpha: Any, m: int, kernel, ctx: Context) -> Any:
    scaled = _scaled_stirling(alpha, m, ctx)
    return ctx.total(scaled[j - 1] * kernel(j) for j in range(1, m + 1))


def _eq6(alpha: Any, x: Any, m: int, ctx: Context) -> Any:
    return _kernel_sum(alpha, m, lambda j: _sigma(x, m, j, ctx), ctx)


def rhs_eq6(alpha: Any, x: Any, m: int, mode=None) -> Any:
    """sum_j j! S(alpha, j) sigma(x, m, j); equals sum_{k<=m} k^alpha x^k."""
    _check_m(m)
    ctx = resolve_context(mode, alpha, x)
    return ctx.result(_eq6(alpha, ctx.scalar(x), m, ctx))


def rhs_eq13(alpha: Any, x: Any, m: int, mode=None) -> Any:
    """Right-hand side for sum_{k<=m} x^k / k^alpha: :func:`rhs_eq6` at ``-alpha``."""
    return rhs_eq6(-alpha, x, m, mode)


def _eq8(alpha: Any, m: int, variant: str, ctx: Context) -> Any:
    if variant == "EQ8":
        return _kernel_sum(alpha, m, lambda j: ctx.scalar(upper_sum_binomial(m, j)), ctx)
    # C(m, j) (j-1)! S(alpha+1, j) = C(m, j) * [j! S(alpha+1, j)] / j
    scaled = _scaled_stirling(alpha + 1, m, ctx)
    return ctx.total(scaled[j - 1] * ctx.scalar(Fraction(comb(m, j), j)) for j in range(1, m + 1))


def rhs_eq8(alpha: Any, m: int, variant: str = "EQ8", mode=None) -> Any:
    """Right-hand sides for sum_{k<=m} k^alpha.

    ``variant="EQ8"``: sum_j C(m+1, j+1) j! S(alpha, j).
    ``variant="EQ10"``: sum_j C(m, j) (j-1)! S(alpha+1, j).
    """
    _check_m(m)
    variant = str(variant)
    if variant not in ("EQ8", "EQ10"):
        raise InvalidParams(f"variant must be EQ8 or EQ10, got {variant!r}")
    ctx = resolve_context(mode, alpha)
    return ctx.result(_eq8(alpha, m, variant, ctx))


def _eq16(n: int, x: Any, m: int, ctx: Context, guard: float) -> Any:
    d = 1 - x
    if d == 0 or (ctx is not EXACT and abs(d) < guard):
        raise SingularPoint("singular point x=1", point=x)
    a = [eulerian_polynomial(k)(x) for k in range(n + 1)]
    tail = ctx.total(
        comb(n, k) * (m + 1) ** (n - k) * a[k] / d ** (k + 1) for k in range(n + 1)
    )
    return a[n] / d ** (n + 1) - x ** (m + 1) * tail


def rhs_eq16(n: int, x: Any, m: int, mode=None, guard: float = SINGULAR_GUARD) -> Any:
    """Eulerian closed form of sum_{k=1}^{m} k^n x^k for a non-negative integer ``n``.

    At ``n = 0`` the formula counts the ``k = 0`` term too and returns
    ``sum_{k=0}^{m} x^k``. Raises :class:`SingularPoint` at ``x = 1``, or when
    ``|1 - x| < guard`` in floating-point modes.
    """
    _check_m(m)
    n = _integer_exponent(n, "n", 0)
    ctx = resolve_context(mode, x)
    return ctx.result(_eq16(n, ctx.scalar(x), m, ctx, guard))


def _eq17(alpha: Any, x: Any, m: int, ctx: Context) -> Any:
    return _kernel_sum(alpha, m, lambda j: _weighted_closed(x, m, j), ctx)


def rhs_eq17(alpha: Any, x: Any, m: int, mode=None) -> Any:
    """sum_j C(m, j) j! S(alpha, j) x^j (1+x)^(m-j); equals sum_k C(m, k) k^alpha x^k."""
    _check_m(m)
    ctx = resolve_context(mode, alpha, x)
    return ctx.result(_eq17(alpha, ctx.scalar(x), m, ctx))


def _eq19(r: int, x: Any, n: int, ctx: Context, guard: float) -> Any:
    s = 1 + x
    if s == 0 or (ctx is not EXACT and abs(s) < guard):
        raise SingularPoint("singular point x=-1", point=x)
    q = x / s
    terms = []
    for j in range(min(r, n) + 1):
        # exact integer: sum_k (-1)^k C(j, k) k^r
        diff = sum((-1) ** k * comb(j, k) * k ** r for k in range(j + 1))
        if diff:
            terms.append((-1) ** j * comb(n, j) * diff * q ** j)
    return s ** n * ctx.total(terms) if terms else 0 * s


def rhs_eq19(r: int, x: Any, n: int, mode=None, guard: float = SINGULAR_GUARD) -> Any:
    """Finite-difference form of sum_{k=0}^{n} C(n, k) k^r x^k for a positive integer ``r``."""
    _check_m(n)
    r = _integer_exponent(r, "r", 1)
    ctx = resolve_context(mode, x)
    return ctx.result(_eq19(r, ctx.scalar(x), n, ctx, guard))


def _eq20(alpha: Any, m: int, ctx: Context) -> Any:
    return _kernel_sum(alpha, m, lambda j: ctx.scalar(upper_sum_stirling1(m, j)), ctx)


def rhs_eq20(alpha: Any, m: int, mode=None) -> Any:
    """sum_j j! S(alpha, j) c(m+1, j+1); equals sum_k c(m, k) k^alpha."""
    _check_m(m)
    ctx = resolve_context(mode, alpha)
    return ctx.result(_eq20(alpha, m, ctx))


def _eq23(alpha: Any, m: int, ctx: Context) -> Any:
    return _kernel_sum(alpha, m, lambda j: ctx.scalar(upper_sum_harmonic(m, j)), ctx)


def rhs_eq23(alpha: Any, m: int, mode=None) -> Any:
    """sum_j j! S(alpha, j) C(m+1, j+1) (H_{m+1} - 1/(j+1)); equals sum_k H_k k^alpha."""
    _check_m(m)
    ctx = resolve_context(mode, alpha)
    return ctx.result(_eq23(alpha, m, ctx))


def _eq24(alpha: Any, m: int, ctx: Context) -> Any:
    return _kernel_sum(alpha, m, lambda j: ctx.scalar(upper_sum_reciprocal(m, j)), ctx)


def rhs_eq24(alpha: Any, m: int, mode=None) -> Any:
    """sum_j j! S(alpha, j) C(m+1, j) (H_{m+1} - H_j); equals sum_k k^alpha/(m-k+1)."""
    _check_m(m)
    ctx = resolve_context(mode, alpha)
    return ctx.result(_eq24(alpha, m, ctx))


# -- verification ------------------------------------------------------------

def _validate(ident: IdentityId, p: IdentityParams) -> None:
    _check_m(p.m)
    if ident in USES_X:
        if p.x is None:
            raise InvalidParams(f"{ident} needs x")
    elif p.x is not None:
        raise InvalidParams(f"{ident} does not take x")
    if ident is IdentityId.LEMMA4:
        if p.coeffs is None or len(p.coeffs) < p.m:
            raise InvalidParams(f"LEMMA4 needs at least m={p.m} coefficients")
    elif p.coeffs is not None:
        raise InvalidParams(f"{ident} does not take coefficients")
    if ident is IdentityId.EQ16:
        _integer_exponent(p.alpha, "n", 1)
    elif ident is IdentityId.EQ19:
        _integer_exponent(p.alpha, "r", 1)


def _sides(ident: IdentityId, p: IdentityParams, ctx: Context, guard: float) -> Tuple[Any, Any]:
    alpha, m = p.alpha, p.m
    x = None if p.x is None else ctx.scalar(p.x)
    one = _one(ctx)
    if ident in INTEGER_EXPONENT:
        alpha = _integer_exponent(alpha, "exponent", 1)

    def lhs(weight: Weight, exponent: Any = alpha, base: Any = None) -> Any:
        return _direct(exponent, one if base is None else base, _weights(weight, m, ctx), m, ctx)

    if ident is IdentityId.LEMMA4:
        c = [ctx.scalar(v) for v in p.coeffs[:m]]
        return ctx.total(c[k - 1] * ctx.power(k, alpha) for k in range(1, m + 1)), _lemma(c, alpha, m, ctx)
    if ident is IdentityId.EQ6:
        return lhs(Weight.NONE, base=x), _eq6(alpha, x, m, ctx)
    if ident is IdentityId.EQ13:
        return lhs(Weight.NONE, exponent=-alpha, base=x), _eq6(-alpha, x, m, ctx)
    if ident in (IdentityId.EQ8, IdentityId.EQ10):
        return lhs(Weight.NONE), _eq8(alpha, m, ident.value, ctx)
    if ident is IdentityId.EQ16:
        rhs = _eq16(alpha, x, m, ctx, guard)
        return lhs(Weight.NONE, base=x), rhs
    if ident is IdentityId.EQ17:
        return lhs(Weight.BINOMIAL, base=x), _eq17(alpha, x, m, ctx)
    if ident is IdentityId.EQ19:
        rhs = _eq19(alpha, x, m, ctx, guard)
        return lhs(Weight.BINOMIAL, base=x), rhs
    if ident is IdentityId.EQ20:
        return lhs(Weight.STIRLING1), _eq20(alpha, m, ctx)
    if ident is IdentityId.EQ23:
        return lhs(Weight.HARMONIC), _eq23(alpha, m, ctx)
    if ident is IdentityId.EQ24:
        return lhs(Weight.RECIPROCAL), _eq24(alpha, m, ctx)
    raise InvalidParams(f"unknown identity {ident!r}")  # pragma: no cover


def _report_mode(ctx: Context) -> str:
    return "exact" if ctx is EXACT else f"float-{ctx.mode}"


def verify_identity(ident, params: IdentityParams, mode="exact", tol: Optional[float] = None,
                    guard: float = SINGULAR_GUARD) -> IdentityReport:
    """Evaluate both sides of one identity and compare them.

    In exact mode the sides must be equal as fractions and ``tol`` is
    ignored. In the float modes the check passes when the relative error is
    within ``tol``, or, for ``|lhs| < 1e-12``, when the absolute error is.
    """
    try:
        ident = IdentityId(str(ident).upper())
    except ValueError:
        raise InvalidParams(f"unknown identity {ident!r}") from None
    _validate(ident, params)
    ctx = get_context(mode)
    if tol is None:
        tol = DEFAULT_TOL[ctx.mode]

    lhs_native, rhs_native = _sides(ident, params, ctx, guard)
    lhs, rhs = ctx.result(lhs_native), ctx.result(rhs_native)
    if ctx is EXACT:
        diff = abs(lhs - rhs)
        abs_err = float(diff)
        rel_err = float(diff / abs(lhs)) if lhs else (0.0 if not diff else math.inf)
        passed = lhs == rhs
        tol = 0.0
    else:
        abs_err = float(abs(lhs_native - rhs_native))
        size = abs(lhs)
        rel_err = abs_err / size if size else (0.0 if abs_err == 0 else math.inf)
        passed = rel_err <= tol or (size < TINY_LHS and abs_err <= tol)
    return IdentityReport(ident, params, lhs, rhs, abs_err, rel_err, _report_mode(ctx), passed, float(tol))

"""Seeded random sweeps of the identity checker.

Each identity gets its own :class:`random.Random` stream seeded from the
string ``"<seed>:<identity>"``, so the draws for one identity do not depend
on which other identities are swept alongside it. ``random.Random`` is a
Mersenne Twister with platform-independent string seeding, which makes
sweeps reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, List, Optional

from .identities import (
    FLOAT_SUITE,
    INTEGER_EXPONENT,
    USES_X,
    IdentityId,
    IdentityParams,
    IdentityReport,
    verify_identity,
)

__all__ = ["SweepConfig", "draw_params", "iter_sweep", "run_sweep"]

# keep x this far from the poles of EQ16 (x = 1) and EQ19 (x = -1), and away
# from the zero of (1+x)^(m-j) in EQ17
POLE_MARGIN = 0.25


@dataclass(frozen=True)
class SweepConfig:
    draws: int = 100
    m_max: int = 12
    alpha_bound: float = 4.0
    x_bound: float = 2.0
    alpha: Any = None  # pins alpha when set
    x: Any = None  # pins x when set
    seed: int = 0
    mode: str = "standard"
    tol: Optional[float] = None


def _uniform_complex(rng: random.Random, bound: float) -> complex:
    return complex(rng.uniform(-bound, bound), rng.uniform(-bound, bound))


def _draw_x(rng: random.Random, ident: IdentityId, bound: float) -> complex:
    while True:
        x = _uniform_complex(rng, bound)
        if abs(x) > bound:
            continue
        if ident in (IdentityId.EQ17, IdentityId.EQ19) and abs(1 + x) < POLE_MARGIN:
            continue
        if ident is IdentityId.EQ16 and abs(1 - x) < POLE_MARGIN:
            continue
        return x


def draw_params(ident: IdentityId, rng: random.Random, cfg: SweepConfig) -> IdentityParams:
    m = rng.randint(1, cfg.m_max)
    if cfg.alpha is not None:
        alpha = cfg.alpha
    elif ident in INTEGER_EXPONENT:
        alpha = rng.randint(1, max(1, int(cfg.alpha_bound)))
    else:
        alpha = _uniform_complex(rng, cfg.alpha_bound)
    x = None
    if ident in USES_X:
        x = cfg.x if cfg.x is not None else _draw_x(rng, ident, cfg.x_bound)
    coeffs = None
    if ident is IdentityId.LEMMA4:
        coeffs = tuple(_uniform_complex(rng, 1.0) for _ in range(m))
    return IdentityParams(alpha=alpha, m=m, x=x, coeffs=coeffs)


def iter_sweep(idents: Iterable[IdentityId], cfg: SweepConfig) -> Iterator[IdentityReport]:
    """Yield reports identity by identity, draws in order."""
    for ident in idents:
        ident = IdentityId(ident)
        rng = random.Random(f"{cfg.seed}:{ident.value}")
        for _ in range(cfg.draws):
            params = draw_params(ident, rng, cfg)
            yield verify_identity(ident, params, mode=cfg.mode, tol=cfg.tol)


def run_sweep(idents: Iterable[IdentityId] = FLOAT_SUITE, cfg: SweepConfig = SweepConfig()) -> List[IdentityReport]:
    return list(iter_sweep(idents, cfg))

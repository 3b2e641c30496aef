"""Logistic map dynamics and the real-to-byte bridge used by the ciphers."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .errors import DomainError

logger = logging.getLogger(__name__)

#: Public initial condition shared by all schemes (not secret).
DEFAULT_X0 = 0.99
#: Iterations discarded before the working state is used.
DEFAULT_BURN_IN = 64
#: Working states are kept inside [STATE_EPS, 1 - STATE_EPS].
STATE_EPS = 1e-12


@dataclass(frozen=True)
class LogisticParams:
    r: float
    x0: float = DEFAULT_X0

    def __post_init__(self):
        if not 0.0 < self.x0 < 1.0:
            raise DomainError(f"x0 must lie in (0, 1), got {self.x0!r}")
        if not 0.0 < self.r <= 4.0:
            raise DomainError(f"r must lie in (0, 4], got {self.r!r}")


def _check_r(r):
    if not 0.0 < r <= 4.0:
        raise DomainError(f"r must lie in (0, 4], got {r!r}")


def logistic_step(x: float, r: float) -> float:
    """One application of the logistic map, ``r * x * (1 - x)``."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    _check_r(r)
    return r * x * (1.0 - x)


def guard(x: float) -> float:
    """Clamp a working state away from the absorbing endpoints."""
    if x < STATE_EPS:
        return STATE_EPS
    if x > 1.0 - STATE_EPS:
        return 1.0 - STATE_EPS
    return x


def orbit(params: LogisticParams, n: int, burn_in: int = 0) -> list[float]:
    """Iterate ``burn_in`` times silently, then return the next ``n`` iterates.

    The initial condition itself is never part of the output.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if burn_in < 0:
        raise DomainError(f"burn_in must be >= 0, got {burn_in}")
    r, x = params.r, params.x0
    for _ in range(burn_in):
        x = logistic_step(x, r)
    out = []
    for _ in range(n):
        x = logistic_step(x, r)
        out.append(x)
    return out


def lyapunov_estimate(params: LogisticParams, n: int, burn_in: int = 1000) -> float:
    """Mean of ``ln|r (1 - 2x)|`` over ``n`` orbit points after a transient.

    Points landing exactly on x = 0.5 have zero derivative; they are skipped
    (and logged) and the mean is taken over the remaining terms.
    """
    if n < 1000:
        raise DomainError(f"n must be >= 1000 for a meaningful estimate, got {n}")
    r = params.r
    total = 0.0
    skipped = 0
    for x in orbit(params, n, burn_in):
        d = abs(r * (1.0 - 2.0 * x))
        if d == 0.0:
            skipped += 1
            continue
        total += math.log(d)
    if skipped:
        logger.warning("lyapunov_estimate: skipped %d zero-derivative terms", skipped)
    if skipped == n:
        return float("-inf")
    return total / (n - skipped)


def quantize_byte(x: float) -> int:
    """Map ``x`` in [0, 1] onto 0..255 by ``floor(256 x)``; 1.0 maps to 255."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    return min(int(x * 256.0), 255)

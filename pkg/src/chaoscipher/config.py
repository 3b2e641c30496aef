"""Tunable scheme defaults and the ``key=value`` config file reader."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .chaos import DEFAULT_BURN_IN, DEFAULT_X0
from .errors import ConfigError
from .primitives import FEEDBACKS

KEY_TICK = 1e-4


@dataclass(frozen=True)
class Config:
    """Public (non-secret) parameters shared by encryptor and decryptor.

    ``key_step`` is the default increment for key sweeps and the key
    sensitivity perturbation; it must be a whole number of key-grid ticks.
    """

    omega: float = 2.0 * math.pi
    phi: float = 0.0
    feedback: str = "default"
    burn_in: int = DEFAULT_BURN_IN
    x0: float = DEFAULT_X0
    key_step: float = KEY_TICK

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ConfigError(f"omega must be finite, got {self.omega!r}")
        if not math.isfinite(self.phi):
            raise ConfigError(f"phi must be finite, got {self.phi!r}")
        if self.feedback not in FEEDBACKS:
            raise ConfigError(
                f"feedback must be one of {sorted(FEEDBACKS)}, got {self.feedback!r}"
            )
        if isinstance(self.burn_in, bool) or not isinstance(self.burn_in, int) or self.burn_in < 0:
            raise ConfigError(f"burn_in must be a non-negative integer, got {self.burn_in!r}")
        if not 0.0 < self.x0 < 1.0:
            raise ConfigError(f"x0 must lie in (0, 1), got {self.x0!r}")
        ticks = self.key_step / KEY_TICK
        if not (0.0 < self.key_step <= 0.43) or abs(ticks - round(ticks)) > 1e-6:
            raise ConfigError(
                f"key_step must be a positive multiple of {KEY_TICK} up to 0.43, "
                f"got {self.key_step!r}"
            )


DEFAULT_CONFIG = Config()

_CONVERTERS = {
    "omega": float,
    "phi": float,
    "feedback": str,
    "burn_in": int,
    "x0": float,
    "key_step": float,
}


def parse_config(text: str) -> Config:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are ignored.

    Absent keys keep their defaults. Errors carry the offending line number.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key=value, got {raw.strip()!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONVERTERS:
            raise ConfigError(
                f"unknown key {key!r}; known keys: {', '.join(_CONVERTERS)}", lineno
            )
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        if not value:
            raise ConfigError(f"missing value for {key!r}", lineno)
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError:
            raise ConfigError(f"invalid value for {key}: {value!r}", lineno) from None
        try:
            dataclasses.replace(DEFAULT_CONFIG, **{key: values[key]})
        except ConfigError as exc:
            raise ConfigError(str(exc), lineno) from None
    return Config(**values)

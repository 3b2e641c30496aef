"""The three logistic-map stream ciphers behind one encrypt/decrypt interface.

Per-byte rules (``x`` is the chaotic state, ``r`` the secret key):

* ``logistic``: ``x <- f(x)``; keystream byte ``k = q(sine_unit(x))``;
  ``c = p ^ k``; then ``x <- frac(x + c / 65536)``.
* ``nlfsr``: ``x <- f(x)``; ``k = nlfsr_byte() ^ q(x)``; ``c = p ^ k``.
  Synchronous: the keystream never depends on the message.
* ``mnlfsr``: keystream as ``nlfsr``; ``c = p ^ prev_c ^ k``; then
  ``x <- frac(x + c / 256)`` and ``prev_c <- c``.

Here ``f`` is the logistic map and ``q`` the byte quantizer. Every state
update is clamped into ``[1e-12, 1 - 1e-12]``. Decryption replays the same
state evolution driven by the received ciphertext.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .chaos import guard, logistic_step, quantize_byte
from .config import DEFAULT_CONFIG, Config
from .errors import KeyOutOfRange
from .primitives import nlfsr_byte_table

KEY_MIN_TICKS = 35700
KEY_MAX_TICKS = 40000


class SchemeId(str, enum.Enum):
    LOGISTIC = "logistic"
    NLFSR = "nlfsr"
    MNLFSR = "mnlfsr"

    @property
    def code(self) -> int:
        return _CODES[self]

    def __str__(self):
        return self.value


_CODES = {
    SchemeId.LOGISTIC: _kernels.LOGISTIC,
    SchemeId.NLFSR: _kernels.NLFSR,
    SchemeId.MNLFSR: _kernels.MNLFSR,
}


@dataclass(frozen=True, order=True)
class SchemeKey:
    """Secret map parameter on the grid ``ticks * 1e-4``, 3.57 <= r <= 4.0."""

    ticks: int

    def __post_init__(self):
        if not KEY_MIN_TICKS <= self.ticks <= KEY_MAX_TICKS:
            raise KeyOutOfRange(
                f"key {self.ticks / 10000:.4f} outside key space [3.57, 4.0]"
            )

    @property
    def r(self) -> float:
        return self.ticks / 10000

    def __str__(self):
        return f"{self.r:.4f}"


def make_key(r) -> SchemeKey:
    """Round ``r`` to the nearest 1e-4 grid point and validate it."""
    if isinstance(r, SchemeKey):
        return r
    r = float(r)
    if not math.isfinite(r):
        raise KeyOutOfRange(f"key must be finite, got {r!r}")
    return SchemeKey(round(r * 10000))


def scheme_id(scheme) -> SchemeId:
    return scheme if isinstance(scheme, SchemeId) else SchemeId(str(scheme).lower())


@dataclass
class CipherState:
    x: float
    nlfsr: int
    prev_c: int
    y: int = 0


def init_state(scheme, key, config: Config = DEFAULT_CONFIG) -> CipherState:
    """Working state after the burn-in; identical for all three schemes.

    The NLFSR seed and the chaining IV are both ``q(x)``; a zero seed is
    replaced by 0x01 because the all-zero register is absorbing.
    """
    scheme_id(scheme)
    r = make_key(key).r
    x = config.x0
    for _ in range(config.burn_in):
        x = guard(logistic_step(x, r))
    q = quantize_byte(x)
    return CipherState(x=x, nlfsr=q or 1, prev_c=q)


def _as_array(data) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8)


def _run(scheme, key, data, decrypt, config):
    sid = scheme_id(scheme)
    k = make_key(key)
    src = _as_array(data)
    out = np.empty_like(src)
    nxt, nout = nlfsr_byte_table(config.feedback)
    _kernels.run(
        sid.code, k.r, src, decrypt, config.x0, config.burn_in,
        config.omega, config.phi, nxt, nout, out,
    )
    return out.tobytes()


def encrypt(scheme, key, plaintext: bytes, config: Config = DEFAULT_CONFIG) -> bytes:
    return _run(scheme, key, plaintext, False, config)


def decrypt(scheme, key, ciphertext: bytes, config: Config = DEFAULT_CONFIG) -> bytes:
    return _run(scheme, key, ciphertext, True, config)

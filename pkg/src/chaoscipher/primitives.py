"""Auxiliary nonlinear functions: a sinusoid and an 8-bit NLFSR.

The NLFSR register is a plain ``int`` in 0..255. Bit ``b0`` (the least
significant bit) is the output end; each clock emits ``b0``, shifts the
register right, and writes the feedback bit into ``b7``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ArgumentError, DomainError

NlfsrState = int


@dataclass(frozen=True)
class SineParams:
    A: float = 1.0
    omega: float = 2.0 * math.pi
    phi: float = 0.0

    def __post_init__(self):
        if not self.A > 0.0:
            raise DomainError(f"amplitude must be positive, got {self.A!r}")


DEFAULT_SINE = SineParams()


def sine_transform(t: float, params: SineParams = DEFAULT_SINE) -> float:
    return params.A * math.sin(params.omega * t + params.phi)


def sine_unit(x: float, params: SineParams = DEFAULT_SINE) -> float:
    """Sinusoid rescaled onto [0, 1]: ``(sin(omega x + phi) + 1) / 2``.

    The amplitude is normalized away, so ``params.A`` has no effect here.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    return (math.sin(params.omega * x + params.phi) + 1.0) / 2.0


def _bit(s, i):
    return (s >> i) & 1


def feedback_default(s: int) -> int:
    # b0 ^ b2 ^ b3 ^ (b1 & b7); cycle through 0x01 has length 188
    return _bit(s, 0) ^ _bit(s, 2) ^ _bit(s, 3) ^ (_bit(s, 1) & _bit(s, 7))


def feedback_maxlen(s: int) -> int:
    # b0 ^ b2 ^ b5 ^ (b3 & b7); one cycle through all 255 nonzero states
    return _bit(s, 0) ^ _bit(s, 2) ^ _bit(s, 5) ^ (_bit(s, 3) & _bit(s, 7))


FEEDBACKS: dict[str, Callable[[int], int]] = {
    "default": feedback_default,
    "maxlen": feedback_maxlen,
}


def _feedback(name):
    try:
        return FEEDBACKS[name]
    except KeyError:
        raise ArgumentError(
            f"unknown NLFSR feedback {name!r}; choose from {sorted(FEEDBACKS)}"
        ) from None


def _check_state(state):
    if not 0 <= state <= 0xFF:
        raise ArgumentError(f"NLFSR state must be an 8-bit value, got {state!r}")


def nlfsr_step(state: NlfsrState, feedback: str = "default") -> tuple[NlfsrState, int]:
    """Clock the register once. Returns ``(next_state, output_bit)``."""
    _check_state(state)
    f = _feedback(feedback)(state)
    return (state >> 1) | (f << 7), state & 1


def nlfsr_byte(state: NlfsrState, feedback: str = "default") -> tuple[NlfsrState, int]:
    """Clock eight times; the first output bit becomes the LSB of the byte."""
    out = 0
    for i in range(8):
        state, bit = nlfsr_step(state, feedback)
        out |= bit << i
    return state, out


@lru_cache(maxsize=None)
def nlfsr_byte_table(feedback: str = "default") -> tuple[np.ndarray, np.ndarray]:
    """Lookup tables ``(next_state, output_byte)`` of :func:`nlfsr_byte`."""
    nxt = np.empty(256, dtype=np.uint8)
    out = np.empty(256, dtype=np.uint8)
    for s in range(256):
        nxt[s], out[s] = nlfsr_byte(s, feedback)
    nxt.flags.writeable = False
    out.flags.writeable = False
    return nxt, out


def cycle_length(seed: NlfsrState, feedback: str = "default") -> int:
    """Number of clocks before ``seed`` recurs (0 if it never does)."""
    _check_state(seed)
    state = seed
    for n in range(1, 257):
        state, _ = nlfsr_step(state, feedback)
        if state == seed:
            return n
    return 0

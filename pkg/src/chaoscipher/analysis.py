"""Sensitivity metrics, key-space sweeps, known-plaintext search and the
identifiability test that together fill one row of an analysis table."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from . import _kernels
from .config import DEFAULT_CONFIG, Config
from .errors import ArgumentError
from .primitives import nlfsr_byte_table
from .schemes import (
    KEY_MAX_TICKS,
    KEY_MIN_TICKS,
    SchemeId,
    SchemeKey,
    encrypt,
    make_key,
    scheme_id,
)

KEY_SPACE_TICKS = KEY_MAX_TICKS - KEY_MIN_TICKS

IDENTIFIABLE = "I"
NON_IDENTIFIABLE = "NI"

# A stand-in for a real scheme in identifiability checks: (key, plaintext) -> output
OutputFn = Callable[[SchemeKey, bytes], bytes]


def _ticks(value, what):
    t = value * 10000
    if abs(t - round(t)) > 1e-6:
        raise ArgumentError(f"{what} {value!r} is not on the 1e-4 key grid")
    return int(round(t))


@dataclass(frozen=True)
class KeyDomain:
    """Closed key interval ``[lo, hi]`` swept with increment ``step``."""

    lo: float
    hi: float
    step: float = 1e-4

    def __post_init__(self):
        if not self.step > 0:
            raise ArgumentError(f"step must be positive, got {self.step!r}")
        lo, hi, st = self.lo_ticks, self.hi_ticks, self.step_ticks
        if not KEY_MIN_TICKS <= lo < hi <= KEY_MAX_TICKS:
            raise ArgumentError(
                f"domain ({self.lo}, {self.hi}) must satisfy 3.57 <= lo < hi <= 4.0"
            )
        if (hi - lo) % st:
            raise ArgumentError(
                f"domain width {self.hi - self.lo:.4f} is not a multiple of step {self.step}"
            )

    @property
    def lo_ticks(self) -> int:
        return _ticks(self.lo, "lo")

    @property
    def hi_ticks(self) -> int:
        return _ticks(self.hi, "hi")

    @property
    def step_ticks(self) -> int:
        return _ticks(self.step, "step")

    def __len__(self):
        return (self.hi_ticks - self.lo_ticks) // self.step_ticks + 1

    def __str__(self):
        return f"({self.lo:.4f}, {self.hi:.4f})"


@dataclass(frozen=True)
class FlipSpec:
    byte_index: int = 0
    bit_index: int = 0

    def __post_init__(self):
        if self.byte_index < 0:
            raise ArgumentError(f"byte index must be >= 0, got {self.byte_index}")
        if not 0 <= self.bit_index <= 7:
            raise ArgumentError(f"bit index must be in 0..7, got {self.bit_index}")

    def apply(self, data: bytes) -> bytes:
        if self.byte_index >= len(data):
            raise ArgumentError(
                f"flip byte {self.byte_index} outside a {len(data)}-byte message"
            )
        out = bytearray(data)
        out[self.byte_index] ^= 1 << self.bit_index
        return bytes(out)


@dataclass(frozen=True)
class AnalysisRow:
    plaintext: bytes
    key: SchemeKey
    ciphertext_hex: str
    pt_sensitivity_pct: float
    key_sensitivity_pct: float
    domain: KeyDomain
    identifiable: str
    kpa_robust_prefix_len: int
    secret_key_ok: bool

    @property
    def kpa_singleton_len(self) -> int | None:
        """Shortest known prefix that pins the key down, or None if none does."""
        if self.kpa_robust_prefix_len >= len(self.plaintext):
            return None
        return self.kpa_robust_prefix_len + 1


def bit_difference_percent(a: bytes, b: bytes) -> float:
    """Hamming distance between equal-length byte strings as a percentage."""
    if len(a) != len(b):
        raise ArgumentError(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        raise ArgumentError("inputs must be non-empty")
    diff = int.from_bytes(bytes(a), "little") ^ int.from_bytes(bytes(b), "little")
    return 100.0 * bin(diff).count("1") / (8 * len(a))


def plaintext_sensitivity(scheme, key, p: bytes, flip: FlipSpec = FlipSpec(),
                          config: Config = DEFAULT_CONFIG) -> float:
    flipped = flip.apply(p)
    return bit_difference_percent(
        encrypt(scheme, key, p, config), encrypt(scheme, key, flipped, config)
    )


def mean_plaintext_sensitivity(scheme, key, p: bytes,
                               config: Config = DEFAULT_CONFIG) -> float:
    """Average of :func:`plaintext_sensitivity` over every single-bit flip."""
    if not p:
        raise ArgumentError("plaintext must be non-empty")
    base = encrypt(scheme, key, p, config)
    total = 0.0
    for i in range(len(p)):
        for bit in range(8):
            other = encrypt(scheme, key, FlipSpec(i, bit).apply(p), config)
            total += bit_difference_percent(base, other)
    return total / (8 * len(p))


def key_sensitivity(scheme, key, p: bytes, delta: float | None = None,
                    config: Config = DEFAULT_CONFIG) -> float:
    """Ciphertext bit change when the key moves by ``delta`` (default: one
    sweep step). Moves downward when the upward neighbour leaves the key space."""
    key = make_key(key)
    if delta is None:
        delta = config.key_step
    shift = int(round(delta * 10000))
    if shift == 0:
        return 0.0
    for ticks in (key.ticks + shift, key.ticks - shift):
        if KEY_MIN_TICKS <= ticks <= KEY_MAX_TICKS:
            other = SchemeKey(ticks)
            break
    else:
        raise ArgumentError(f"no valid key at distance {delta} from {key}")
    return bit_difference_percent(
        encrypt(scheme, key, p, config), encrypt(scheme, other, p, config)
    )


def enumerate_keys(domain: KeyDomain) -> list[SchemeKey]:
    return [
        SchemeKey(t)
        for t in range(domain.lo_ticks, domain.hi_ticks + 1, domain.step_ticks)
    ]


def key_domain(key, width: float = 0.20, step: float = 1e-4) -> KeyDomain:
    """Window of ``width`` centred on ``key``, slid (not cut) to fit the key space."""
    key = make_key(key)
    w = int(round(width * 10000))
    if not 0 < w <= KEY_SPACE_TICKS:
        raise ArgumentError(f"width must be in (0, 0.43], got {width!r}")
    lo = key.ticks - w // 2
    lo = min(max(lo, KEY_MIN_TICKS), KEY_MAX_TICKS - w)
    return KeyDomain(lo / 10000, (lo + w) / 10000, step)


def _key_array(keys):
    return np.array([k.r for k in keys], dtype=np.float64)


def _as_u8(data):
    return np.frombuffer(bytes(data), dtype=np.uint8)


def _kernel_args(config):
    nxt, nout = nlfsr_byte_table(config.feedback)
    return config.x0, config.burn_in, config.omega, config.phi, nxt, nout


def match_lengths(scheme, ciphertext: bytes, plaintext: bytes, keys,
                  config: Config = DEFAULT_CONFIG) -> np.ndarray:
    """Per key, how many leading bytes of its decryption agree with ``plaintext``."""
    if len(plaintext) > len(ciphertext):
        raise ArgumentError(
            f"known prefix ({len(plaintext)} bytes) longer than ciphertext ({len(ciphertext)})"
        )
    return _kernels.match_lengths(
        scheme_id(scheme).code, _key_array(keys), _as_u8(ciphertext),
        _as_u8(plaintext), *_kernel_args(config),
    )


def kpa_bruteforce(scheme, ciphertext: bytes, known_prefix: bytes, domain: KeyDomain,
                   config: Config = DEFAULT_CONFIG) -> list[SchemeKey]:
    """Every key in ``domain`` whose decryption starts with ``known_prefix``,
    in increasing key order. The attack is robust iff this is not a singleton."""
    keys = enumerate_keys(domain)
    lengths = match_lengths(scheme, ciphertext, known_prefix, keys, config)
    m = len(known_prefix)
    return [k for k, n in zip(keys, lengths) if n >= m]


def kpa_candidate_counts(scheme, ciphertext: bytes, plaintext: bytes, domain: KeyDomain,
                         config: Config = DEFAULT_CONFIG) -> list[int]:
    """Candidate-set size for every known-prefix length 0..len(plaintext)."""
    lengths = match_lengths(scheme, ciphertext, plaintext, enumerate_keys(domain), config)
    hist = np.bincount(lengths, minlength=len(plaintext) + 1)
    # count(m) = #keys whose match length is >= m
    return [int(v) for v in hist[::-1].cumsum()[::-1]]


def kpa_robust_prefix_len(counts: list[int], start: int = 2) -> int:
    """Longest known prefix that still leaves the attacker several candidates.

    Prefix lengths from ``start`` upward are scanned for the first singleton
    candidate set; the answer is one less than that, or the full message
    length when no prefix isolates the key.
    """
    n = len(counts) - 1
    for m in range(start, n + 1):
        if counts[m] == 1:
            return m - 1
    return n


def _prefix_outputs(scheme, p, keys, n_out, config):
    if callable(scheme) and not isinstance(scheme, (str, SchemeId)):
        return [bytes(scheme(k, p))[:n_out] for k in keys]
    rows = _kernels.encrypt_many(
        scheme_id(scheme).code, _key_array(keys), _as_u8(p[:n_out]), *_kernel_args(config)
    )
    return [row.tobytes() for row in rows]


def identifiability(scheme: Union[SchemeId, str, OutputFn], p: bytes, domain: KeyDomain,
                    n_out: int = 2, config: Config = DEFAULT_CONFIG):
    """Test whether the first ``n_out`` ciphertext bytes determine the key.

    ``scheme`` may also be any callable ``(key, plaintext) -> bytes``.
    Returns ``(verdict, collisions)`` where verdict is ``"I"`` when the
    key-to-output map is injective over the domain and ``"NI"`` otherwise;
    ``collisions`` lists every colliding key pair ``(a, b)`` with ``a < b``,
    sorted.
    """
    if n_out < 1:
        raise ArgumentError(f"n_out must be >= 1, got {n_out}")
    if len(p) < n_out:
        raise ArgumentError(f"plaintext shorter than n_out={n_out}")
    keys = enumerate_keys(domain)
    groups = defaultdict(list)
    for k, out in zip(keys, _prefix_outputs(scheme, bytes(p), keys, n_out, config)):
        groups[out].append(k)
    collisions = []
    for members in groups.values():
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                collisions.append((a, b))
    collisions.sort()
    return (NON_IDENTIFIABLE if collisions else IDENTIFIABLE), collisions


def analyze_row(scheme, key, p: bytes, flip: FlipSpec | None = FlipSpec(),
                config: Config = DEFAULT_CONFIG, width: float = 0.20,
                n_out: int = 2) -> AnalysisRow:
    """Fill one analysis-table row. ``flip=None`` averages the plaintext
    sensitivity over all single-bit flips."""
    sid = scheme_id(scheme)
    key = make_key(key)
    p = bytes(p)
    c = encrypt(sid, key, p, config)
    if flip is None:
        pt_sens = mean_plaintext_sensitivity(sid, key, p, config)
    else:
        pt_sens = plaintext_sensitivity(sid, key, p, flip, config)
    domain = key_domain(key, width, config.key_step)
    verdict, _ = identifiability(sid, p, domain, min(n_out, len(p)), config)
    counts = kpa_candidate_counts(sid, c, p, domain, config)
    return AnalysisRow(
        plaintext=p,
        key=key,
        ciphertext_hex=c.hex(),
        pt_sensitivity_pct=pt_sens,
        key_sensitivity_pct=key_sensitivity(sid, key, p, config=config),
        domain=domain,
        identifiable=verdict,
        kpa_robust_prefix_len=kpa_robust_prefix_len(counts),
        secret_key_ok=verdict == IDENTIFIABLE,
    )

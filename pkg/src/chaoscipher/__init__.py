"""Logistic-map stream ciphers (logistic, NLFSR, modified NLFSR) and a
cryptanalysis battery: sensitivities, key sweeps, known-plaintext brute
force and identifiability."""

from .analysis import (
    AnalysisRow,
    FlipSpec,
    KeyDomain,
    analyze_row,
    bit_difference_percent,
    enumerate_keys,
    identifiability,
    key_domain,
    key_sensitivity,
    kpa_bruteforce,
    plaintext_sensitivity,
)
from .chaos import LogisticParams, logistic_step, lyapunov_estimate, orbit, quantize_byte
from .config import DEFAULT_CONFIG, Config, parse_config
from .errors import ArgumentError, ChaosCipherError, ConfigError, DomainError, KeyOutOfRange
from .primitives import SineParams, nlfsr_byte, nlfsr_step, sine_transform, sine_unit
from .report import ReportFormat, orbit_dump, render_table
from .schemes import CipherState, SchemeId, SchemeKey, decrypt, encrypt, init_state, make_key

__version__ = "0.1.0"

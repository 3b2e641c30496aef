"""Compiled per-byte loops behind the cipher and sweep operations.

Every kernel mirrors the scalar rules in :mod:`chaoscipher.schemes`
operation for operation, so results are bit-identical to a pure Python
evaluation under IEEE-754 double arithmetic. No fastmath.
"""

import math

import numpy as np
from numba import njit

LOGISTIC = 0
NLFSR = 1
MNLFSR = 2

EPS = 1e-12
HI = 1.0 - 1e-12


@njit(cache=True)
def _guard(x):
    if x < EPS:
        return EPS
    if x > HI:
        return HI
    return x


@njit(cache=True)
def _qbyte(x):
    v = int(x * 256.0)
    return 255 if v > 255 else v


@njit(cache=True)
def _frac(v):
    return v - math.floor(v)


@njit(cache=True)
def init_state(r, x0, burn_in):
    x = x0
    for _ in range(burn_in):
        x = _guard(r * x * (1.0 - x))
    q = _qbyte(x)
    seed = q if q != 0 else 1
    return x, seed, q


@njit(cache=True)
def run(scheme, r, data, decrypt, x0, burn_in, omega, phi, nxt, nout, out):
    """Encrypt or decrypt ``data`` into ``out`` (same length)."""
    x, reg, prev = init_state(r, x0, burn_in)
    for i in range(data.shape[0]):
        x = _guard(r * x * (1.0 - x))
        if scheme == LOGISTIC:
            k = _qbyte((math.sin(omega * x + phi) + 1.0) / 2.0)
        else:
            k = nout[reg] ^ _qbyte(x)
            reg = nxt[reg]
        b = data[i]
        if scheme == MNLFSR:
            if decrypt:
                c = b
                out[i] = b ^ k ^ prev
            else:
                c = b ^ prev ^ k
                out[i] = c
            x = _guard(_frac(x + c / 256.0))
            prev = c
        else:
            out[i] = b ^ k
            if scheme == LOGISTIC:
                c = b if decrypt else b ^ k
                x = _guard(_frac(x + c / 65536.0))


@njit(cache=True)
def match_lengths(scheme, rs, ct, known, x0, burn_in, omega, phi, nxt, nout):
    """For each key, the length of the longest common prefix of its
    decryption of ``ct`` with ``known`` (decryption stops at first mismatch)."""
    m = known.shape[0]
    res = np.empty(rs.shape[0], dtype=np.int64)
    for j in range(rs.shape[0]):
        r = rs[j]
        x, reg, prev = init_state(r, x0, burn_in)
        n = 0
        while n < m:
            x = _guard(r * x * (1.0 - x))
            if scheme == LOGISTIC:
                k = _qbyte((math.sin(omega * x + phi) + 1.0) / 2.0)
            else:
                k = nout[reg] ^ _qbyte(x)
                reg = nxt[reg]
            c = ct[n]
            if scheme == MNLFSR:
                p = c ^ k ^ prev
                x = _guard(_frac(x + c / 256.0))
                prev = c
            else:
                p = c ^ k
                if scheme == LOGISTIC:
                    x = _guard(_frac(x + c / 65536.0))
            if p != known[n]:
                break
            n += 1
        res[j] = n
    return res


@njit(cache=True)
def encrypt_many(scheme, rs, data, x0, burn_in, omega, phi, nxt, nout):
    """Ciphertexts of one plaintext under every key in ``rs`` (one row each)."""
    out = np.empty((rs.shape[0], data.shape[0]), dtype=np.uint8)
    for j in range(rs.shape[0]):
        run(scheme, rs[j], data, False, x0, burn_in, omega, phi, nxt, nout, out[j])
    return out

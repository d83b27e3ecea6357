"""Hot numeric kernels with a numba path and a pure-numpy fallback.

Set ``COPRIME_RNS_PURE_NUMPY=1`` in the environment to force the numpy
implementations (also used automatically when numba is not importable).
Both paths produce identical arrays; ``tests/test_kernels.py`` checks this.

All kernels work on fixed-width machine integers only. Residues and moduli
are ``uint64`` (moduli are capped at ``2**32 - 1`` so a product of two
residues never overflows); factor tables are ``int64`` padded with zeros.
"""
import math
import os

import numpy as np

_FLAG = os.environ.get("COPRIME_RNS_PURE_NUMPY", "").strip().lower()
FORCE_NUMPY = _FLAG not in ("", "0", "false", "no")

try:
    import numba
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not FORCE_NUMPY
BACKEND = "numba" if USE_NUMBA else "numpy"

OP_ADD, OP_SUB, OP_MUL = 0, 1, 2
OPCODES = {"add": OP_ADD, "sub": OP_SUB, "mul": OP_MUL}

MAX_MODULUS = 2**32 - 1


def table_width(hi):
    """Number of columns needed to hold the distinct primes of any n <= hi."""
    width, primorial, p = 0, 1, 1
    while True:
        p += 1
        if any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
            continue
        primorial *= p
        if primorial > hi:
            return max(width, 1)
        width += 1


# ---------------------------------------------------------------------------
# numba-compiled loops (plain Python source; compiled below when enabled)

def _factor_table_loop(lo, hi, width):
    n = hi - lo + 1
    out = np.zeros((n, width), dtype=np.int64)
    for i in range(n):
        rem = lo + i
        col = 0
        d = 2
        while d * d <= rem:
            if rem % d == 0:
                out[i, col] = d
                col += 1
                while rem % d == 0:
                    rem //= d
            d += 1
        if rem > 1:
            out[i, col] = rem
    return out


def _residues_loop(values, moduli):
    n = values.shape[0]
    m = moduli.shape[0]
    out = np.empty((n, m), dtype=np.uint64)
    for i in range(n):
        v = values[i]
        for j in range(m):
            out[i, j] = v % moduli[j]
    return out


def _channel_loop(a, b, moduli, opcode):
    n, m = a.shape
    out = np.empty((n, m), dtype=np.uint64)
    for i in range(n):
        for j in range(m):
            p = moduli[j]
            x = a[i, j]
            y = b[i, j]
            if opcode == 0:
                out[i, j] = (x + y) % p
            elif opcode == 1:
                out[i, j] = (x + (p - y)) % p
            else:
                out[i, j] = (x * y) % p
    return out


def _coprime_matrix_loop(rows, cols):
    n = rows.shape[0]
    m = cols.shape[0]
    w1 = rows.shape[1]
    w2 = cols.shape[1]
    out = np.ones((n, m), dtype=np.bool_)
    for i in range(n):
        for j in range(m):
            hit = False
            for s in range(w1):
                q = rows[i, s]
                if q == 0:
                    break
                for t in range(w2):
                    r = cols[j, t]
                    if r == 0 or r > q:
                        break
                    if r == q:
                        hit = True
                        break
                if hit:
                    break
            out[i, j] = not hit
    return out


# ---------------------------------------------------------------------------
# pure-numpy equivalents

def _factor_table_numpy(lo, hi, width):
    values = np.arange(lo, hi + 1, dtype=np.int64)
    rem = values.copy()
    out = np.zeros((values.size, width), dtype=np.int64)
    col = np.zeros(values.size, dtype=np.int64)
    rows = np.arange(values.size)
    for d in range(2, math.isqrt(hi) + 1):
        hit = (rem % d == 0) & (rem >= d * d)
        # divisors above sqrt(rem) are handled by the residual step below
        if not hit.any():
            continue
        idx = rows[hit]
        out[idx, col[idx]] = d
        col[idx] += 1
        while True:
            div = rem[idx] % d == 0
            if not div.any():
                break
            sub = idx[div]
            rem[sub] //= d
    tail = rem > 1
    out[rows[tail], col[tail]] = rem[tail]
    return out


def _residues_numpy(values, moduli):
    return values[:, None] % moduli[None, :]


def _channel_numpy(a, b, moduli, opcode):
    p = moduli[None, :]
    if opcode == OP_ADD:
        return (a + b) % p
    if opcode == OP_SUB:
        return (a + (p - b)) % p
    return (a * b) % p


def _coprime_matrix_numpy(rows, cols, chunk=256):
    out = np.empty((rows.shape[0], cols.shape[0]), dtype=bool)
    c = cols[None, :, None, :]
    for start in range(0, rows.shape[0], chunk):
        r = rows[start:start + chunk, None, :, None]
        shared = (r == c) & (r != 0)
        out[start:start + chunk] = ~shared.any(axis=(2, 3))
    return out


if HAS_NUMBA:
    _njit = numba.njit(cache=True, nogil=True)
    _factor_table_numba = _njit(_factor_table_loop)
    _residues_numba = _njit(_residues_loop)
    _channel_numba = _njit(_channel_loop)
    _coprime_matrix_numba = _njit(_coprime_matrix_loop)
else:  # pragma: no cover
    _factor_table_numba = _factor_table_numpy
    _residues_numba = _residues_numpy
    _channel_numba = _channel_numpy
    _coprime_matrix_numba = _coprime_matrix_numpy

IMPLEMENTATIONS = {
    "numba": {
        "factor_table": _factor_table_numba,
        "residues": _residues_numba,
        "channel": _channel_numba,
        "coprime_matrix": _coprime_matrix_numba,
    },
    "numpy": {
        "factor_table": _factor_table_numpy,
        "residues": _residues_numpy,
        "channel": _channel_numpy,
        "coprime_matrix": _coprime_matrix_numpy,
    },
}
_ACTIVE = IMPLEMENTATIONS[BACKEND]


# ---------------------------------------------------------------------------
# public entry points

def factor_table(lo, hi, backend=None):
    """Distinct prime factors of every integer in [lo, hi], one row each.

    Row ``i`` describes ``lo + i``; primes ascend and unused columns are 0.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"bad factor range [{lo}, {hi}]")
    impl = IMPLEMENTATIONS[backend or BACKEND]["factor_table"]
    return impl(int(lo), int(hi), table_width(hi))


def residues(values, moduli, backend=None):
    values = np.ascontiguousarray(values, dtype=np.uint64)
    moduli = np.ascontiguousarray(moduli, dtype=np.uint64)
    impl = IMPLEMENTATIONS[backend or BACKEND]["residues"]
    return impl(values, moduli)


def channel(a, b, moduli, op, backend=None):
    """Channelwise ``(a op b) mod p`` over 2-D residue arrays."""
    a = np.ascontiguousarray(a, dtype=np.uint64)
    b = np.ascontiguousarray(b, dtype=np.uint64)
    moduli = np.ascontiguousarray(moduli, dtype=np.uint64)
    impl = IMPLEMENTATIONS[backend or BACKEND]["channel"]
    return impl(a, b, moduli, OPCODES[op])


def coprime_matrix(rows, cols, backend=None):
    """Boolean matrix: True where two factor-table rows share no prime."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    cols = np.ascontiguousarray(cols, dtype=np.int64)
    impl = IMPLEMENTATIONS[backend or BACKEND]["coprime_matrix"]
    return impl(rows, cols)

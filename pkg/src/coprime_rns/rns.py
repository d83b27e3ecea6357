"""Forward conversion, channelwise arithmetic and CRT reconstruction."""
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import ContextError, DomainError, RangeError, ShapeError


def egcd(a, b):
    """Iterative extended Euclid: ``(g, x, y)`` with ``a*x + b*y == g``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(a, m):
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise DomainError(f"{a} has no inverse modulo {m}")
    return x % m


def residue_dtype(max_modulus):
    """Narrowest unsigned dtype holding every residue below ``max_modulus``."""
    for dt in (np.uint8, np.uint16, np.uint32):
        if max_modulus - 1 <= np.iinfo(dt).max:
            return np.dtype(dt)
    return np.dtype(np.uint64)


@dataclass(frozen=True)
class RnsContext:
    moduli: tuple
    big_P: int
    partials: tuple
    inverses: tuple
    constants: tuple

    @property
    def channels(self):
        return len(self.moduli)

    @property
    def dtype(self):
        return residue_dtype(max(self.moduli))

    def moduli_array(self):
        return np.array(self.moduli, dtype=np.uint64)


class RnsVector:
    """Residues S_1..S_n aligned with the channels of an RnsContext."""

    __slots__ = ("residues", "context")

    def __init__(self, residues, context):
        residues = [int(s) for s in residues]
        if len(residues) != context.channels:
            raise ShapeError(f"{len(residues)} residues for {context.channels} channels")
        for s, p in zip(residues, context.moduli):
            if not 0 <= s < p:
                raise RangeError(f"residue {s} outside [0, {p})")
        self.residues = np.array(residues, dtype=context.dtype)
        self.context = context

    def __iter__(self):
        return iter(self.tolist())

    def __len__(self):
        return len(self.residues)

    def tolist(self):
        return [int(s) for s in self.residues]

    def __eq__(self, other):
        if not isinstance(other, RnsVector):
            return NotImplemented
        return self.context.moduli == other.context.moduli and self.tolist() == other.tolist()

    def __repr__(self):
        return f"RnsVector({self.tolist()}, moduli={list(self.context.moduli)})"


def make_context(moduli):
    """Precompute P, P/p_i, q_i = (P/p_i)^-1 mod p_i and C_i = (P/p_i)*q_i."""
    moduli = tuple(int(m) for m in moduli)
    if not moduli:
        raise DomainError("empty moduli list")
    for m in moduli:
        if m < 2:
            raise DomainError(f"modulus {m} < 2")
        if m > kernels.MAX_MODULUS:
            raise DomainError(f"modulus {m} exceeds {kernels.MAX_MODULUS}")
    for a, b in combinations(moduli, 2):
        g = math.gcd(a, b)
        if g != 1:
            raise ContextError(a, b, g)
    P = math.prod(moduli)
    partials = tuple(P // p for p in moduli)
    inverses = tuple(mod_inverse(Pi, p) for Pi, p in zip(partials, moduli))
    constants = tuple(Pi * q for Pi, q in zip(partials, inverses))
    return RnsContext(moduli, P, partials, inverses, constants)


def to_rns(ctx, value):
    value = int(value)
    if not 0 <= value < ctx.big_P:
        raise RangeError(f"value {value} outside [0, {ctx.big_P})")
    return RnsVector([value % p for p in ctx.moduli], ctx)


def _check_vector(ctx, v):
    residues = v.tolist() if isinstance(v, RnsVector) else [int(s) for s in v]
    if len(residues) != ctx.channels:
        raise ShapeError(f"{len(residues)} residues for {ctx.channels} channels")
    return residues


def from_rns(ctx, v):
    """CRT reconstruction: ``sum(S_i * C_i) mod P``."""
    residues = _check_vector(ctx, v)
    return sum(s * c for s, c in zip(residues, ctx.constants)) % ctx.big_P


def channel_op(ctx, a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul'} independently on every channel."""
    if op not in kernels.OPCODES:
        raise DomainError(f"unknown channel op {op!r}")
    ra = np.array([_check_vector(ctx, a)], dtype=np.uint64)
    rb = np.array([_check_vector(ctx, b)], dtype=np.uint64)
    out = kernels.channel(ra, rb, ctx.moduli_array(), op)
    return RnsVector(out[0], ctx)


# batched machine-word paths --------------------------------------------------

def to_rns_batch(ctx, values):
    """Residue matrix (one row per value) for non-negative values below min(P, 2**64)."""
    try:
        values = np.asarray(values, dtype=np.uint64)
    except OverflowError:
        raise RangeError("batch values must be non-negative machine words") from None
    if values.size and int(values.max()) >= ctx.big_P:
        raise RangeError(f"values must lie in [0, {ctx.big_P})")
    out = kernels.residues(values, ctx.moduli_array())
    return out.astype(ctx.dtype)


def channel_op_batch(ctx, a, b, op):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[1] != ctx.channels:
        raise ShapeError(f"residue arrays {a.shape} and {b.shape} do not fit {ctx.channels} channels")
    out = kernels.channel(a, b, ctx.moduli_array(), op)
    return out.astype(ctx.dtype)


def from_rns_batch(ctx, rows):
    rows = np.asarray(rows)
    if rows.ndim != 2 or rows.shape[1] != ctx.channels:
        raise ShapeError(f"residue array {rows.shape} does not fit {ctx.channels} channels")
    return [from_rns(ctx, row.tolist()) for row in rows]

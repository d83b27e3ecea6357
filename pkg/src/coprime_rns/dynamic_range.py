"""Exact dynamic range P = prod(moduli) and its bit width."""
import math
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_SEGMENT_BITS = 1000


@dataclass(frozen=True)
class DynamicRange:
    product: int
    bits: int


def _check(moduli):
    moduli = [int(m) for m in moduli]
    if not moduli:
        raise DomainError("dynamic range of an empty moduli list is undefined")
    bad = [m for m in moduli if m < 2]
    if bad:
        raise DomainError(f"moduli must be >= 2, got {bad}")
    return moduli


def exact_range(moduli):
    """Exact product and ``floor(log2(P)) + 1`` (the bit length of P)."""
    moduli = _check(moduli)
    product = math.prod(moduli)
    return DynamicRange(product, product.bit_length())


def segments(moduli, segment_bit_limit=DEFAULT_SEGMENT_BITS):
    """Group consecutive moduli so every segment product stays below ``2**limit``."""
    moduli = _check(moduli)
    if segment_bit_limit < 1:
        raise DomainError(f"segment_bit_limit must be positive, got {segment_bit_limit}")
    widest = max(moduli, key=int.bit_length)
    if widest.bit_length() > segment_bit_limit:
        raise DomainError(
            f"modulus {widest} needs {widest.bit_length()} bits, "
            f"more than the segment limit {segment_bit_limit}"
        )
    ceiling = 1 << segment_bit_limit
    out, current = [], 1
    for m in moduli:
        if current * m >= ceiling:
            out.append(current)
            current = 1
        current *= m
    out.append(current)
    return out


def segmented_bits(moduli, segment_bit_limit=DEFAULT_SEGMENT_BITS):
    """Bit width of the total product assembled from bounded segment products.

    Segment products are combined exactly, so the result always equals
    ``exact_range(moduli).bits``.
    """
    total = 1
    for seg in segments(moduli, segment_bit_limit):
        total *= seg
    return total.bit_length()


def log2_estimate(moduli):
    """Floating-point ``sum(log2(p))``; a sanity cross-check only."""
    return math.fsum(math.log2(m) for m in _check(moduli))

"""Greedy construction of a maximal pairwise co-prime moduli set over [X, Y].

The pipeline runs four passes over the integers of the range, always in
descending value order:

1. classify every value (prime, prime power, composite, even composite);
2. keep only the largest power of two among the even values;
3. greedily select primes and prime powers co-prime to everything chosen;
4. substitute any remaining value that beats the product of the selected
   moduli it conflicts with, repeating until nothing changes.
"""
import logging
import math
import numbers
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .errors import RangeError
from .kernels import MAX_MODULUS
from .number_theory import PrimeFactorSet, factor_range, is_power_of_two

log = logging.getLogger(__name__)

NO_POWER_OF_TWO = "range [{lo}, {hi}] contains no power of two; all even values rejected"


class Klass(str, Enum):
    PRIME = "prime"
    PRIME_POWER = "prime-power"
    COMPOSITE = "composite"
    EVEN_COMPOSITE = "even-composite"


class Status(str, Enum):
    SELECTED = "selected"
    REJECTED = "rejected"
    SUBSTITUTED_IN = "substituted-in"
    SUBSTITUTED_OUT = "substituted-out"


@dataclass(frozen=True)
class CandidateRecord:
    value: int
    factors: PrimeFactorSet
    klass: Klass
    status: Optional[Status] = None
    phase: int = 1

    @property
    def is_candidate(self):
        """Primes and prime powers are the greedy scan's candidates."""
        return self.klass in (Klass.PRIME, Klass.PRIME_POWER)

    @property
    def even_rejected(self):
        return self.phase == 2 and self.status is Status.REJECTED

    def mark(self, status, phase):
        return replace(self, status=status, phase=phase)

    def to_dict(self):
        return {
            "value": self.value,
            "primes": list(self.factors.primes),
            "klass": self.klass.value,
            "status": self.status.value if self.status else None,
            "phase": self.phase,
        }


@dataclass(frozen=True)
class ModuliSet:
    moduli: tuple
    range_lo: int
    range_hi: int
    power_of_two: Optional[int] = None
    trace: tuple = ()
    warnings: tuple = field(default=())

    def __len__(self):
        return len(self.moduli)

    def __iter__(self):
        return iter(self.moduli)

    @property
    def size(self):
        return len(self.moduli)

    @property
    def product(self):
        return math.prod(self.moduli)


def check_range(X, Y):
    if not (isinstance(X, numbers.Integral) and isinstance(Y, numbers.Integral)):
        raise RangeError(f"range bounds must be integers, got ({X!r}, {Y!r})")
    if X < 2 or X >= Y:
        raise RangeError(f"need 2 <= X < Y, got X={X}, Y={Y}")
    if Y > MAX_MODULUS:
        raise RangeError(f"Y={Y} exceeds {MAX_MODULUS}")
    return int(X), int(Y)


def _classify(pf):
    v = pf.value
    if len(pf.primes) == 1:
        return Klass.PRIME if pf.primes[0] == v else Klass.PRIME_POWER
    return Klass.EVEN_COMPOSITE if v % 2 == 0 else Klass.COMPOSITE


def identify_candidates(X, Y):
    """One classified record per integer in [X, Y], descending."""
    X, Y = check_range(X, Y)
    factored = factor_range(X, Y)
    return [CandidateRecord(pf.value, pf, _classify(pf)) for pf in reversed(factored)]


def largest_power_of_two(lo, hi):
    p = 1 << (hi.bit_length() - 1)
    return p if p >= lo else None


def filter_evens(candidates):
    """Reject every even value except the largest power of two present."""
    values = [r.value for r in candidates]
    keep = largest_power_of_two(min(values), max(values))
    out = []
    for r in candidates:
        if r.value % 2 == 0 and r.value != keep:
            r = r.mark(Status.REJECTED, 2)
        out.append(r)
    return out


def _bounds(candidates):
    values = [r.value for r in candidates]
    return min(values), max(values)


def greedy_select(candidates):
    """Descending scan of primes and prime powers, keeping each one co-prime to all kept so far."""
    lo, hi = _bounds(candidates)
    owner = {}
    chosen = []
    trace = [r for r in candidates if r.even_rejected]
    for r in sorted(candidates, key=lambda r: -r.value):
        if r.status is not None or not r.is_candidate:
            continue
        if any(q in owner for q in r.factors.primes):
            trace.append(r.mark(Status.REJECTED, 3))
            continue
        for q in r.factors.primes:
            owner[q] = r.value
        chosen.append(r.value)
        trace.append(r.mark(Status.SELECTED, 3))
    pow2 = next((v for v in chosen if is_power_of_two(v)), None)
    return ModuliSet(tuple(sorted(chosen, reverse=True)), lo, hi, pow2, tuple(trace))


def substitute_pass(mset, candidates):
    """Swap in values exceeding the product of the selected moduli they conflict with.

    Passes repeat until one full descending pass makes no change; each swap
    strictly grows the product, so this terminates.
    """
    by_value = {r.value: r for r in candidates}
    selected = {v: by_value[v].factors.primes for v in mset.moduli}
    owner = {q: v for v, primes in selected.items() for q in primes}
    pool = sorted((r for r in candidates if not r.even_rejected), key=lambda r: -r.value)
    trace = list(mset.trace)

    changed = True
    while changed:
        changed = False
        for r in pool:
            c = r.value
            if c in selected:
                continue
            conflicts = {owner[q] for q in r.factors.primes if q in owner}
            if c <= math.prod(conflicts):
                continue
            for b in sorted(conflicts, reverse=True):
                for q in selected.pop(b):
                    del owner[q]
                trace.append(by_value[b].mark(Status.SUBSTITUTED_OUT, 4))
            selected[c] = r.factors.primes
            for q in r.factors.primes:
                owner[q] = c
            trace.append(r.mark(Status.SUBSTITUTED_IN, 4))
            log.debug("substituted %d for %s", c, sorted(conflicts))
            changed = True

    return replace(mset, moduli=tuple(sorted(selected, reverse=True)), trace=tuple(trace))


def generate(X, Y):
    """Maximal pairwise co-prime moduli set in [X, Y] (descending)."""
    X, Y = check_range(X, Y)
    candidates = filter_evens(identify_candidates(X, Y))
    partial = greedy_select(candidates)
    result = substitute_pass(partial, candidates)
    if result.power_of_two is None:
        msg = NO_POWER_OF_TWO.format(lo=X, hi=Y)
        log.warning(msg)
        result = replace(result, warnings=(msg,))
    return result

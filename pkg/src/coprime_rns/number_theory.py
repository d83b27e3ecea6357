"""Trial-division factorization and co-primality by factor-set intersection."""
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import DomainError


@dataclass(frozen=True)
class PrimeFactorSet:
    """An integer ``value >= 2`` with its distinct prime factors (no exponents)."""

    value: int
    primes: tuple

    def __contains__(self, q):
        return q in self.primes

    def __len__(self):
        return len(self.primes)

    def shares_factor(self, other):
        return not set(self.primes).isdisjoint(other.primes)


@lru_cache(maxsize=1 << 16)
def _distinct_primes(n):
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return tuple(primes)


@lru_cache(maxsize=1 << 16)
def _prime_set(n):
    return frozenset(_distinct_primes(n))


def factorize(n):
    """Distinct prime factors of ``n`` by trial division up to sqrt of the remainder."""
    n = int(n)
    if n < 2:
        raise DomainError(f"factorization undefined for n={n}")
    return PrimeFactorSet(n, _distinct_primes(n))


def factor_range(lo, hi):
    """Factor every integer in [lo, hi] in one batched kernel call.

    Returns a list of PrimeFactorSet indexed by ``n - lo``.
    """
    if lo < 2 or hi < lo:
        raise DomainError(f"factorization undefined on [{lo}, {hi}]")
    table = kernels.factor_table(lo, hi)
    out = []
    for i, row in enumerate(table.tolist()):
        primes = tuple(q for q in row if q)
        out.append(PrimeFactorSet(lo + i, primes))
    return out


def is_prime(n):
    if n < 2:
        return False
    return _distinct_primes(n) == (n,)


def is_prime_power(n):
    """Base prime ``q`` if ``n == q**e`` for some ``e >= 1``, else None."""
    primes = factorize(n).primes
    return primes[0] if len(primes) == 1 else None


def is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def are_coprime(a, b):
    """True iff the distinct prime factors of ``a`` and ``b`` are disjoint.

    1 is co-prime to everything.
    """
    if a < 1 or b < 1:
        raise DomainError(f"co-primality undefined for ({a}, {b})")
    if a == 1 or b == 1:
        return True
    return _prime_set(a).isdisjoint(_prime_set(b))

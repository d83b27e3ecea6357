"""Exhaustive branch-and-bound search for the maximum-product co-prime subset.

Independent of the greedy generator: it uses its own trial division and
``math.gcd`` and never calls into ``generator`` or ``number_theory``.
"""
import math
from dataclasses import dataclass

from .errors import GuardError, RangeError
from .generator import ModuliSet

ORACLE_MAX_Y = 64


@dataclass(frozen=True)
class OracleResult:
    best_set: ModuliSet
    best_product: int
    nodes_explored: int


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _bound(remaining, least, most):
    """Optimistic product of what can still be added.

    Pairwise co-prime picks never share their smallest (or their largest)
    prime factor, so at most one value per such class survives; the
    product of the per-class maxima bounds any completion.
    """
    by_least, by_most = {}, {}
    for v in remaining:
        a, b = least[v], most[v]
        if v > by_least.get(a, 1):
            by_least[a] = v
        if v > by_most.get(b, 1):
            by_most[b] = v
    return min(math.prod(by_least.values()), math.prod(by_most.values()))


def optimal_set(X, Y, branch_order="descending"):
    """Provably maximal-product pairwise co-prime subset of [X, Y], Y <= 64.

    With the default descending branch order, ties between equal products
    go to the lexicographically largest descending moduli list.
    """
    if not (isinstance(X, int) and isinstance(Y, int)) or X < 2 or X >= Y:
        raise RangeError(f"need 2 <= X < Y, got X={X}, Y={Y}")
    if Y > ORACLE_MAX_Y:
        raise GuardError(f"oracle search limited to Y <= {ORACLE_MAX_Y}, got {Y}")

    values = list(range(Y, X - 1, -1))
    if branch_order == "ascending":
        values.reverse()
    elif branch_order != "descending":
        raise ValueError(f"unknown branch order {branch_order!r}")
    factors = {v: _prime_factors(v) for v in values}
    least = {v: f[0] for v, f in factors.items()}
    most = {v: f[-1] for v, f in factors.items()}

    best = [1, ()]
    nodes = 0

    def search(chosen, product, remaining):
        nonlocal nodes
        nodes += 1
        if not remaining:
            if product > best[0]:
                best[0], best[1] = product, tuple(chosen)
            return
        if product * _bound(remaining, least, most) <= best[0]:
            return
        v, rest = remaining[0], remaining[1:]
        # include v first: yields sets in lexicographically descending order
        chosen.append(v)
        search(chosen, product * v, [w for w in rest if math.gcd(v, w) == 1])
        chosen.pop()
        search(chosen, product, rest)

    search([], 1, values)
    moduli = tuple(sorted(best[1], reverse=True))
    pow2 = next((m for m in moduli if m & (m - 1) == 0), None)
    mset = ModuliSet(moduli, X, Y, pow2)
    return OracleResult(mset, best[0], nodes)

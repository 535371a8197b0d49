"""Brute-force Stanley length by exhaustive interval partitions.

Deliberately shares no code with the solver: points are tuples, intervals
are frozensets, and the recursion tries every admissible interval through the
lexicographically smallest uncovered point, memoized on the uncovered set.
Only for tiny instances.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import DomainError, SizeBudgetExceeded
from .monomials import QuotientModule


def _points(Q: QuotientModule, caps):
    out = []
    for c in product(*(range(g + 1) for g in caps)):
        if Q.contains(c):
            out.append(c)
    return frozenset(out)


def _intervals_through(p, caps):
    """Every admissible interval [a, b] containing p."""
    per_coord = []
    for pj, gj in zip(p, caps):
        opts = [(pj, pj)] if pj < gj else []
        opts += [(a, gj) for a in range(pj + 1)]
        per_coord.append(opts)
    for choice in product(*per_coord):
        ranges = [range(a, b + 1) for a, b in choice]
        yield frozenset(product(*ranges))


def _min_partition(points: frozenset, caps) -> int:
    @lru_cache(maxsize=None)
    def best(remaining: frozenset) -> int:
        if not remaining:
            return 0
        p = min(remaining)
        result = len(remaining)  # singletons always work
        for iv in _intervals_through(p, caps):
            if iv <= remaining:
                result = min(result, 1 + best(remaining - iv))
        return result

    return best(points)


def oracle_slength(Q: QuotientModule, mode: str = "squarefree") -> int:
    """Exact minimum by enumeration.

    ``squarefree``: interval partitions of Δ(J/I), n <= 4.
    ``grid``: admissible-interval partitions of the characteristic grid with
    caps 1 + max exponent, n <= 2 and exponents <= 5.
    """
    if mode == "squarefree":
        if not Q.is_squarefree:
            raise DomainError("squarefree oracle needs a squarefree module")
        if Q.n > 4:
            raise SizeBudgetExceeded("squarefree oracle is limited to n <= 4")
        caps = (1,) * Q.n
    elif mode == "grid":
        top = Q.max_exponents()
        if Q.n > 2 or max(top) > 5:
            raise SizeBudgetExceeded("grid oracle is limited to n <= 2, exponents <= 5")
        caps = tuple(b + 1 for b in top)
    else:
        raise ValueError(f"unknown oracle mode {mode!r}")
    return _min_partition(_points(Q, caps), caps)

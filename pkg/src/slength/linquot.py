"""Linear quotient orders and the decompositions they induce.

An order u_1, ..., u_m of G(I) is linear when every colon
(u_1, ..., u_{j-1}) : u_j is generated by variables.  Such an order gives
I = u_1 K[Z_1] ⊕ ... ⊕ u_m K[Z_m] with Z_j the variables outside the colon,
so slength(I) = |G(I)|.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .decomposition import StanleyDecomposition, StanleySpace, verify
from .errors import DomainError
from .monomials import Monomial, MonomialIdeal, QuotientModule, colon_monomial, degree


@dataclass(frozen=True)
class OrderCheck:
    ok: bool
    failing_index: Optional[int] = None  # 1-based position j of the bad colon
    colon: Optional[MonomialIdeal] = None

    def __bool__(self):
        return self.ok


def _check_permutation(I: MonomialIdeal, ordering):
    ordering = [tuple(u) for u in ordering]
    if sorted(ordering) != sorted(I.gens):
        raise ValueError("ordering is not a permutation of the minimal generators")
    return ordering


def prefix_colon(prefix: Sequence[Monomial], u: Monomial) -> MonomialIdeal:
    """(prefix) : u."""
    return MonomialIdeal(len(u), tuple(colon_monomial(v, u) for v in prefix))


def is_linear_order(I: MonomialIdeal, ordering) -> OrderCheck:
    ordering = _check_permutation(I, ordering)
    for j in range(1, len(ordering)):
        c = prefix_colon(ordering[:j], ordering[j])
        if any(degree(w) != 1 for w in c.gens):
            return OrderCheck(False, j + 1, c)
    return OrderCheck(True)


def find_linear_order(I: MonomialIdeal) -> Optional[list]:
    """First linear order in canonical generator order, by backtracking."""
    gens = list(I.gens)
    m = len(gens)
    if m == 0:
        return None
    dead = set()  # prefix sets known not to extend to a full order

    def extend(order, used):
        if len(order) == m:
            return order
        if used in dead:
            return None
        for i, u in enumerate(gens):
            if used >> i & 1:
                continue
            c = prefix_colon(order, u) if order else None
            if c is not None and any(degree(w) != 1 for w in c.gens):
                continue
            res = extend(order + [u], used | 1 << i)
            if res is not None:
                return res
        dead.add(used)
        return None

    return extend([], 0)


def order_spaces(I: MonomialIdeal, ordering) -> list:
    """Spaces u_j K[Z_j] with Z_j the variables x not in (u_1..u_{j-1}) : u_j."""
    n = I.n
    spaces = []
    for j, u in enumerate(ordering):
        if j == 0:
            Z = frozenset(range(n))
        else:
            c = prefix_colon(ordering[:j], u)
            in_colon = {w.index(1) for w in c.gens if degree(w) == 1}
            Z = frozenset(range(n)) - in_colon
        spaces.append(StanleySpace(tuple(u), Z))
    return spaces


def decomposition_from_order(I: MonomialIdeal, ordering) -> StanleyDecomposition:
    check = is_linear_order(I, ordering)
    if not check:
        raise DomainError(f"not a linear order: colon {check.colon} at position "
                          f"{check.failing_index}")
    return StanleyDecomposition(QuotientModule.of_ideal(I),
                                tuple(order_spaces(I, [tuple(u) for u in ordering])))


def prefix_decomposition_check(I: MonomialIdeal, ordering, Zs=None) -> bool:
    """Does every prefix ideal I_j equal u_1 K[Z_1] ⊕ ... ⊕ u_j K[Z_j]?

    ``Zs`` defaults to the sets read off the prefix colons.  This holds
    exactly when the order is linear.
    """
    ordering = _check_permutation(I, ordering)
    spaces = order_spaces(I, ordering) if Zs is None else [
        StanleySpace(u, frozenset(Z)) for u, Z in zip(ordering, Zs)]
    for j in range(1, len(ordering) + 1):
        prefix = MonomialIdeal(I.n, tuple(ordering[:j]))
        D = StanleyDecomposition(QuotientModule.of_ideal(prefix), tuple(spaces[:j]))
        if not verify(D):
            return False
    return True

"""Exact arithmetic on monomials and monomial ideals.

A monomial is a plain tuple of non-negative exponents, one entry per ambient
variable (``(2, 0, 1)`` is ``x1^2*x3``).  A :class:`MonomialIdeal` stores its
minimal generating set G(I), canonically sorted by total degree and then
lexicographically, so two ideals are equal exactly when they compare equal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from .errors import AmbientDimensionError, DomainError

Monomial = tuple  # tuple[int, ...]


# -- monomial helpers -------------------------------------------------------

def one(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, j: int) -> Monomial:
    """The variable x_{j+1} (``j`` is 0-based)."""
    return tuple(1 if k == j else 0 for k in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def div(u: Monomial, v: Monomial) -> Monomial:
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def colon_monomial(u: Monomial, v: Monomial) -> Monomial:
    """u / gcd(u, v), the generator of (u) : v."""
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def support(u: Monomial) -> frozenset:
    return frozenset(j for j, a in enumerate(u) if a)


def is_squarefree_monomial(u: Monomial) -> bool:
    return all(a <= 1 for a in u)


def from_support(n: int, vars_: Iterable[int]) -> Monomial:
    s = set(vars_)
    return tuple(1 if j in s else 0 for j in range(n))


_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``"x1^2*x3"`` (or ``"1"``) into an exponent tuple of length n."""
    text = text.replace(" ", "")
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _TOKEN.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise AmbientDimensionError(f"variable x{idx} out of range for n={n}")
        exps[idx - 1] += int(m.group(2) or 1)
    return tuple(exps)


def render_monomial(u: Monomial) -> str:
    parts = []
    for j, a in enumerate(u):
        if a == 1:
            parts.append(f"x{j + 1}")
        elif a > 1:
            parts.append(f"x{j + 1}^{a}")
    return "*".join(parts) if parts else "1"


def _sort_key(u: Monomial):
    return (sum(u), u)


# -- ideals -----------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of K[x_1..x_n], stored by its minimal generators.

    The constructor minimalizes whatever it is given, so ``gens`` is always
    G(I).  The zero ideal has no generators; the unit ideal has the single
    generator 1.
    """

    n: int
    gens: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gens", _minimal(self.gens, self.n))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, m):
        return contains(self, m)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(render_monomial(u) for u in self.gens) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (one(self.n),)

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree_monomial(u) for u in self.gens)

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @property
    def is_complete_intersection(self) -> bool:
        """Generators have pairwise disjoint supports."""
        seen = set()
        for u in self.gens:
            s = support(u)
            if s & seen:
                return False
            seen |= s
        return True

    def max_exponents(self) -> tuple:
        if not self.gens:
            return one(self.n)
        return tuple(max(col) for col in zip(*self.gens))


def _minimal(gens: Iterable[Sequence[int]], n: int) -> tuple:
    cands = set()
    for u in gens:
        u = tuple(int(a) for a in u)
        if len(u) != n:
            raise AmbientDimensionError(f"monomial {u} does not have length {n}")
        if any(a < 0 for a in u):
            raise DomainError(f"negative exponent in {u}")
        cands.add(u)
    out = []
    for u in sorted(cands, key=_sort_key):
        # anything dividing u has degree <= deg u and is already in out
        if not any(divides(v, u) for v in out):
            out.append(u)
    return tuple(out)


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(gens))


def ideal(n: int, *gens) -> MonomialIdeal:
    """Convenience constructor: ``ideal(3, "x1*x2", (0, 0, 2))``."""
    return MonomialIdeal(n, tuple(parse_monomial(g, n) if isinstance(g, str) else g
                                  for g in gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (one(n),))


def _check_same(*ideals):
    ns = {I.n for I in ideals}
    if len(ns) != 1:
        raise AmbientDimensionError(f"ambient dimensions differ: {sorted(ns)}")


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.n:
        raise AmbientDimensionError(f"monomial {m} does not have length {I.n}")
    return any(divides(u, m) for u in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I is contained in J."""
    _check_same(I, J)
    return all(contains(J, u) for u in I.gens)


def colon(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    if len(v) != I.n:
        raise AmbientDimensionError(f"monomial {v} does not have length {I.n}")
    return MonomialIdeal(I.n, tuple(colon_monomial(u, v) for u in I.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, tuple(tuple(min(a, 1) for a in u) for u in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.n, tuple(lcm(u, v) for u in I.gens for v in J.gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.n, I.gens + J.gens)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.n, tuple(mul(u, v) for u in I.gens for v in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return unit_ideal(I.n)
    gens = [reduce(mul, combo) for combo in combinations_with_replacement(I.gens, k)]
    return MonomialIdeal(I.n, tuple(gens))


def scale(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The ideal uI."""
    return MonomialIdeal(I.n, tuple(mul(u, v) for v in I.gens))


def common_divisor(I: MonomialIdeal) -> Monomial:
    """gcd of all minimal generators (1 for the zero ideal)."""
    if not I.gens:
        return one(I.n)
    return reduce(gcd, I.gens)


def minimal_primes(I: MonomialIdeal) -> list:
    """Minimal primes of a squarefree ideal, as sorted lists of 0-based
    variable indices.

    These are the minimal transversals of the hypergraph whose edges are the
    generator supports.  Transversals are enumerated by branching on the
    vertices of the first edge not yet hit, then filtered for minimality.
    """
    if not I.is_squarefree:
        raise DomainError("minimal_primes needs a squarefree ideal")
    if I.is_zero or I.is_unit:
        raise DomainError("minimal_primes needs a proper nonzero ideal")
    edges = sorted((support(u) for u in I.gens), key=lambda e: (len(e), sorted(e)))
    found = set()

    def grow(chosen: frozenset):
        for e in edges:
            if not e & chosen:
                for v in sorted(e):
                    grow(chosen | {v})
                return
        found.add(chosen)

    grow(frozenset())
    minimal = [t for t in found if not any(s < t for s in found)]
    return sorted((sorted(t) for t in minimal), key=lambda t: (len(t), t))


def prime_ideal(n: int, vars_: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(variable(n, j) for j in vars_))


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^(k) = P_1^k ∩ ... ∩ P_m^k over the minimal primes of a squarefree I."""
    if k < 1:
        raise ValueError("symbolic power needs k >= 1")
    primes = minimal_primes(I)
    if k == 1:
        return I
    return reduce(intersect, (power(prime_ideal(I.n, P), k) for P in primes))


@dataclass(frozen=True)
class IdealStats:
    alpha: tuple
    beta: tuple


def stats(I: MonomialIdeal) -> IdealStats:
    if I.is_zero:
        raise DomainError("stats of the zero ideal are undefined")
    cols = list(zip(*I.gens))
    return IdealStats(tuple(min(c) for c in cols), tuple(max(c) for c in cols))


def box_monomials(bounds: Sequence[int]):
    """All exponent vectors c with 0 <= c_j <= bounds[j], in lex order."""
    return product(*(range(b + 1) for b in bounds))


# -- quotient modules -------------------------------------------------------

@dataclass(frozen=True)
class QuotientModule:
    """The module J/I for monomial ideals I ⊊ J.

    An ideal I0 is ``QuotientModule(I0, 0)``; the cyclic module S/I0 is
    ``QuotientModule(S, I0)``.
    """

    J: MonomialIdeal
    I: MonomialIdeal

    def __post_init__(self):
        _check_same(self.J, self.I)
        if not is_subideal(self.I, self.J):
            raise DomainError(f"{self.I} is not contained in {self.J}")
        if self.I == self.J:
            raise DomainError("J/I is the zero module")

    @classmethod
    def of_ideal(cls, I: MonomialIdeal) -> "QuotientModule":
        return cls(I, zero_ideal(I.n))

    @classmethod
    def cyclic(cls, I: MonomialIdeal) -> "QuotientModule":
        """S/I."""
        return cls(unit_ideal(I.n), I)

    @property
    def n(self) -> int:
        return self.J.n

    @property
    def is_ideal(self) -> bool:
        return self.I.is_zero

    @property
    def is_cyclic(self) -> bool:
        return self.J.is_unit

    @property
    def is_squarefree(self) -> bool:
        return self.J.is_squarefree and self.I.is_squarefree

    def contains(self, m: Monomial) -> bool:
        return contains(self.J, m) and not contains(self.I, m)

    __contains__ = contains

    def max_exponents(self) -> tuple:
        return tuple(max(a, b) for a, b in zip(self.J.max_exponents(),
                                                self.I.max_exponents()))

    def __str__(self):
        if self.is_ideal:
            return str(self.J)
        return f"{self.J}/{self.I}"

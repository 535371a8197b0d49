"""Transforms that carry a Stanley decomposition of one module to another.

Each function builds the new module and the new list of spaces; lengths never
grow, so each one doubles as a constructive proof of an inequality between
Stanley lengths.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Callable, Optional, Sequence, Union

from .decomposition import StanleyDecomposition, StanleySpace
from .errors import AmbientDimensionError, DomainError, TrivialQuotient
from .monomials import (Monomial, MonomialIdeal, QuotientModule, box_monomials,
                        colon, contains, gcd, ideal_sum, intersect, lcm, mul, radical,
                        scale, symbolic_power)

Target = Union[MonomialIdeal, QuotientModule]


def _module(J: MonomialIdeal, I: MonomialIdeal) -> QuotientModule:
    if I == J:
        raise TrivialQuotient(f"{J}/{I} is zero")
    return QuotientModule(J, I)


# -- scaling and colon ------------------------------------------------------

def scale_decomposition(D: StanleyDecomposition, u: Monomial) -> StanleyDecomposition:
    """D for J/I  ->  D for uJ/uI, same length."""
    Q = D.module
    module = QuotientModule(scale(Q.J, u), scale(Q.I, u))
    return StanleyDecomposition(module, tuple(
        StanleySpace(mul(u, s.u), s.Z) for s in D.spaces))


def colon_module(Q: QuotientModule, v: Monomial) -> QuotientModule:
    return _module(colon(Q.J, v), colon(Q.I, v))


def _colon_variable(D: StanleyDecomposition, j: int) -> StanleyDecomposition:
    n = D.module.n
    e = tuple(1 if k == j else 0 for k in range(n))
    module = colon_module(D.module, e)
    spaces = []
    for s in D.spaces:
        if s.u[j] >= 1:
            spaces.append(StanleySpace(tuple(a - b for a, b in zip(s.u, e)), s.Z))
        elif j in s.Z:
            spaces.append(s)
    return StanleyDecomposition(module, tuple(spaces))


def colon_transform(D: StanleyDecomposition, v: Monomial) -> StanleyDecomposition:
    """D for J/I  ->  D for (J:v)/(I:v), one variable at a time in index order.

    Raises TrivialQuotient when the target module is zero, or when D is a
    decomposition of an ideal that already contains v.
    """
    Q = D.module
    if len(v) != Q.n:
        raise AmbientDimensionError("colon monomial has the wrong length")
    if Q.is_ideal and contains(Q.J, v):
        raise TrivialQuotient("v lies in the ideal, the colon is the unit ideal")
    colon_module(Q, v)  # fail early when the target is zero
    for j, a in enumerate(v):
        for _ in range(a):
            D = _colon_variable(D, j)
    return D


# -- variable extension -----------------------------------------------------

def _pad(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n + 1, tuple(u + (0,) for u in I.gens))


def extend_variable(D: StanleyDecomposition) -> StanleyDecomposition:
    """D for J/I in S  ->  D for JS[y]/IS[y], with y appended as the last variable."""
    Q = D.module
    n = Q.n
    module = QuotientModule(_pad(Q.J), _pad(Q.I))
    return StanleyDecomposition(module, tuple(
        StanleySpace(s.u + (0,), s.Z | {n}) for s in D.spaces))


def restrict_last_variable(D: StanleyDecomposition) -> StanleyDecomposition:
    """Inverse of :func:`extend_variable`: intersect every space with the ring
    without the last variable."""
    Q = D.module
    last = Q.n - 1
    if any(u[last] for u in Q.J.gens + Q.I.gens):
        raise DomainError("the module involves the last variable")
    module = QuotientModule(MonomialIdeal(last, tuple(u[:-1] for u in Q.J.gens)),
                            MonomialIdeal(last, tuple(u[:-1] for u in Q.I.gens)))
    return StanleyDecomposition(module, tuple(
        StanleySpace(s.u[:-1], s.Z - {last}) for s in D.spaces if s.u[last] == 0))


def permute_monomial(u: Monomial, perm: Sequence[int]) -> Monomial:
    out = [0] * len(u)
    for v, a in enumerate(u):
        out[perm[v]] = a
    return tuple(out)


def permute_ideal(I: MonomialIdeal, perm) -> MonomialIdeal:
    return MonomialIdeal(I.n, tuple(permute_monomial(u, perm) for u in I.gens))


def permute_module(Q: QuotientModule, perm) -> QuotientModule:
    return QuotientModule(permute_ideal(Q.J, perm), permute_ideal(Q.I, perm))


def permute_decomposition(D: StanleyDecomposition, perm) -> StanleyDecomposition:
    """Rename variable v to perm[v]."""
    return StanleyDecomposition(permute_module(D.module, perm), tuple(
        StanleySpace(permute_monomial(s.u, perm), frozenset(perm[j] for j in s.Z))
        for s in D.spaces))


# -- polarization -----------------------------------------------------------

@dataclass(frozen=True)
class PolarizationMap:
    """x_j^a  ->  x_{j,1} x_{j,2} ... x_{j,a}, with g_j slots for variable j.

    Slot k of variable j (both 0-based) is target variable ``index(j, k)``.
    """

    splits: tuple

    @property
    def n_source(self) -> int:
        return len(self.splits)

    @property
    def n_target(self) -> int:
        return sum(self.splits)

    def index(self, j: int, k: int) -> int:
        if not 0 <= k < self.splits[j]:
            raise IndexError(f"slot {k} out of range for x{j + 1}")
        return sum(self.splits[:j]) + k

    def monomial(self, u: Monomial) -> Monomial:
        out = []
        for a, g in zip(u, self.splits):
            if a > g:
                raise DomainError(f"exponent {a} exceeds split count {g}")
            out.extend([1] * a + [0] * (g - a))
        return tuple(out)

    def variable_names(self) -> list:
        return [f"x{j + 1}{k + 1}" for j, g in enumerate(self.splits) for k in range(g)]


def _splits(obj: Target) -> tuple:
    return tuple(max(b, 1) for b in obj.max_exponents())


def polarize(obj: Target, splits: Optional[Sequence[int]] = None):
    """Polarize an ideal or quotient module; returns ``(polar, map)``."""
    pmap = PolarizationMap(tuple(splits) if splits is not None else _splits(obj))
    if len(pmap.splits) != obj.n:
        raise AmbientDimensionError("split vector has the wrong length")

    def pol(I):
        return MonomialIdeal(pmap.n_target, tuple(pmap.monomial(u) for u in I.gens))

    if isinstance(obj, QuotientModule):
        return QuotientModule(pol(obj.J), pol(obj.I)), pmap
    return pol(obj), pmap


def _phi_step(u: Monomial, j: int) -> Monomial:
    # one-step polarization of a monomial w.r.t. x_j; y is appended last
    if u[j] >= 2:
        return u[:j] + (u[j] - 1,) + u[j + 1:] + (1,)
    return u + (0,)


def polarize_step(obj: Target, j: int) -> Target:
    """First-step polarization with respect to x_j; the fresh variable y is
    appended as the last variable."""
    def step(I):
        return MonomialIdeal(I.n + 1, tuple(_phi_step(u, j) for u in I.gens))

    if isinstance(obj, QuotientModule):
        return QuotientModule(step(obj.J), step(obj.I))
    return step(obj)


def _stepwise_plan(splits):
    slots = [(j, 0) for j in range(len(splits))]
    steps = []
    for j, g in enumerate(splits):
        for t in range(1, g):
            steps.append(j)
            slots.append((j, t))
    return steps, slots


def polarize_stepwise(obj: Target):
    """Polarize by repeated one-step polarizations (g_1 + ... + g_n - n of
    them), then rename to the grid order of :func:`polarize`."""
    pmap = PolarizationMap(_splits(obj))
    steps, slots = _stepwise_plan(pmap.splits)
    for j in steps:
        obj = polarize_step(obj, j)
    perm = [pmap.index(j, k) for j, k in slots]
    if isinstance(obj, QuotientModule):
        return permute_module(obj, perm), pmap
    return permute_ideal(obj, perm), pmap


def polarize_decomposition(D: StanleyDecomposition, j: int) -> StanleyDecomposition:
    """D for J/I  ->  D' for J¹/I¹ (one-step polarization w.r.t. x_j), same length.

    Each space u·K[Z] becomes Φ(u)·K[Z'] where Φ(u) = y·u/x_j when x_j² | u.
    Z' = Z ∪ {y}, except when x_j ∉ Z and x_j exactly divides u, where
    Z' = Z ∪ {x_j}.
    """
    Q = D.module
    n = Q.n
    y = n
    spaces = []
    for s in D.spaces:
        if j not in s.Z and s.u[j] == 1:
            Z = s.Z | {j}
        else:
            Z = s.Z | {y}
        spaces.append(StanleySpace(_phi_step(s.u, j), Z))
    return StanleyDecomposition(polarize_step(Q, j), tuple(spaces))


def polarize_decomposition_full(D: StanleyDecomposition):
    """Iterate one-step polarization up to J^p/I^p; returns ``(D', map)``."""
    pmap = PolarizationMap(_splits(D.module))
    steps, slots = _stepwise_plan(pmap.splits)
    for j in steps:
        D = polarize_decomposition(D, j)
    perm = [pmap.index(j, k) for j, k in slots]
    return permute_decomposition(D, perm), pmap


# -- radical ----------------------------------------------------------------

def radical_module(Q: QuotientModule) -> QuotientModule:
    return _module(radical(Q.J), radical(Q.I))


def radical_decomposition(D: StanleyDecomposition) -> StanleyDecomposition:
    """D for J/I  ->  D' for √J/√I.

    With a the largest exponent over G(I) ∪ G(J), keep the spaces whose
    exponents outside Z are all divisible by a, and replace every exponent b
    by ceil(b / a).
    """
    Q = D.module
    module = radical_module(Q)
    a = max(max(Q.J.max_exponents()), max(Q.I.max_exponents()), 1)
    spaces = []
    for s in D.spaces:
        if all(e % a == 0 for k, e in enumerate(s.u) if k not in s.Z):
            spaces.append(StanleySpace(tuple(ceil(e / a) for e in s.u), s.Z))
    return StanleyDecomposition(module, tuple(spaces))


# -- intersections and sums -------------------------------------------------

def space_intersection(s: StanleySpace, t: StanleySpace) -> Optional[StanleySpace]:
    """u·K[Z] ∩ v·K[W] as a Stanley space, or None when it is empty."""
    w = lcm(s.u, t.u)
    for k, (a, b, c) in enumerate(zip(w, s.u, t.u)):
        if (a != b and k not in s.Z) or (a != c and k not in t.Z):
            return None
    return StanleySpace(w, s.Z & t.Z)


def intersect_modules(Q1: QuotientModule, Q2: QuotientModule) -> QuotientModule:
    """The module whose monomials are (J1 \\ I1) ∩ (J2 \\ I2)."""
    J = intersect(Q1.J, Q2.J)
    return _module(J, intersect(ideal_sum(Q1.I, Q2.I), J))


def intersect_decompositions(D1: StanleyDecomposition,
                             D2: StanleyDecomposition) -> StanleyDecomposition:
    """Pairwise space intersections; length at most len(D1)·len(D2)."""
    module = intersect_modules(D1.module, D2.module)
    spaces = []
    for s in D1.spaces:
        for t in D2.spaces:
            st = space_intersection(s, t)
            if st is not None:
                spaces.append(st)
    return StanleyDecomposition(module, tuple(spaces))


def disjoint_union(D1: StanleyDecomposition, D2: StanleyDecomposition,
                   module: QuotientModule) -> StanleyDecomposition:
    """Concatenate decompositions of two disjoint modules whose union is ``module``."""
    return StanleyDecomposition(module, D1.spaces + D2.spaces)


def _default_cyclic(I: MonomialIdeal) -> StanleyDecomposition:
    if I.is_principal:
        from .constructions import principal_quotient
        return principal_quotient(I.gens[0])
    from .solver import best_witness
    return best_witness(QuotientModule.cyclic(I))


def sum_decompositions(D_I: StanleyDecomposition, D_J: StanleyDecomposition,
                       D_cyclic_I: Optional[StanleyDecomposition] = None
                       ) -> StanleyDecomposition:
    """I + J = I ⊕ (J ∩ S/I).  Needs a decomposition of S/I; when none is
    given one is built (principal quotient, otherwise a solver witness)."""
    I, J = D_I.module, D_J.module
    if not (I.is_ideal and J.is_ideal):
        raise DomainError("sum_decompositions takes decompositions of ideals")
    target = QuotientModule.of_ideal(ideal_sum(I.J, J.J))
    if all(contains(I.J, u) for u in J.J.gens):
        return StanleyDecomposition(target, D_I.spaces)
    if D_cyclic_I is None:
        D_cyclic_I = _default_cyclic(I.J)
    return disjoint_union(D_I, intersect_decompositions(D_J, D_cyclic_I), target)


def cyclic_of_intersection(D_cyclic_I: StanleyDecomposition,
                           D_cyclic_J: StanleyDecomposition,
                           D_I: StanleyDecomposition) -> StanleyDecomposition:
    """S/(I ∩ J) = S/I ⊕ (I ∩ S/J)."""
    I = D_I.module.J
    J = D_cyclic_J.module.I
    target = QuotientModule.cyclic(intersect(I, J))
    if all(contains(J, u) for u in I.gens):
        return StanleyDecomposition(target, D_cyclic_I.spaces)
    return disjoint_union(D_cyclic_I, intersect_decompositions(D_I, D_cyclic_J), target)


# -- pulling a decomposition back along a monomial map ----------------------

def pullback_decomposition(D2: StanleyDecomposition, phi: Callable[[Monomial], Monomial],
                           module: QuotientModule,
                           caps: Optional[Sequence[int]] = None) -> StanleyDecomposition:
    """Transport a decomposition of J2/I2 to ``module`` = J1/I1 along phi.

    phi must satisfy: u ∈ I1 ⟺ phi(u) ∈ I2, u ∈ J1 ⟺ phi(u) ∈ J2, and
    v ∈ uK[Z] ⟺ phi(v) ∈ phi(u)K[Z].  Space i becomes gcd(U_i)·K[Z_i] where
    U_i collects the monomials of J1 \\ I1 that phi sends into space i; the
    U_i are enumerated on the box [0, caps], which must contain their
    minimal elements.
    """
    if caps is None:
        top = list(module.max_exponents())
        for s in D2.spaces:
            top = [max(c, a) for c, a in zip(top, s.u[:len(top)])]
        caps = [c + 1 for c in top]
    found: dict = {}
    for m in box_monomials(caps):
        if not module.contains(m):
            continue
        image = phi(m)
        for i, s in enumerate(D2.spaces):
            if s.contains(image):
                found[i] = gcd(found[i], m) if i in found else m
                break
    spaces = tuple(StanleySpace(found[i], D2.spaces[i].Z) for i in sorted(found))
    return StanleyDecomposition(module, spaces)


def symbolic_power_module(Q: QuotientModule, k: int) -> QuotientModule:
    """J^(k)/I^(k) for squarefree I ⊊ J (the zero and unit ideals are kept)."""
    if not Q.is_squarefree:
        raise DomainError("symbolic powers need squarefree ideals")

    def sp(I):
        if I.is_zero or I.is_unit:
            return I
        return symbolic_power(I, k)

    return _module(sp(Q.J), sp(Q.I))


def symbolic_pullback(D: StanleyDecomposition, source: QuotientModule,
                      k: int) -> StanleyDecomposition:
    """A decomposition of J^(s)/I^(s) of length <= len(D), from a decomposition
    D of J^(ks)/I^(ks), via u -> u^k."""
    return pullback_decomposition(D, lambda u: tuple(k * a for a in u), source)


def colon_pullback(D: StanleyDecomposition, v: Monomial) -> StanleyDecomposition:
    """(J:v)/(I:v) from a decomposition of J/I via u -> u·v."""
    target = colon_module(D.module, v)
    return pullback_decomposition(D, lambda u: mul(u, v), target)

"""Explicit Stanley decompositions that certify upper bounds on slength."""
from __future__ import annotations

from math import prod

from .decomposition import StanleyDecomposition, StanleySpace
from .errors import DomainError
from .monomials import (Monomial, MonomialIdeal, QuotientModule, colon, common_divisor,
                        degree, div, mul, stats, support)
from .transforms import scale_decomposition


def _all_vars(n):
    return frozenset(range(n))


# -- Janet decomposition ----------------------------------------------------

def janet_bound(I: MonomialIdeal, order=None) -> int:
    """prod over all split variables of (beta_k - alpha_k + 1).

    With the default order the last variable is split first and x_1 is the
    variable left over, so the product runs over k = 2..n.
    """
    st = stats(I)
    order = list(range(I.n)) if order is None else list(order)
    return prod(st.beta[k] - st.alpha[k] + 1 for k in order[1:])


def _janet_spaces(gens, vars_):
    # gens: exponent tuples of length n, all supported on vars_[:]
    *rest, last = vars_
    if not rest:
        (u,) = _min_gens(gens)
        return [StanleySpace(u, frozenset([last]))]
    degs = [u[last] for u in gens]
    lo, hi = min(degs), max(degs)
    spaces = []
    for j in range(lo, hi + 1):
        slice_gens = []
        for u in gens:
            if u[last] <= j:
                v = list(u)
                v[last] = 0
                slice_gens.append(tuple(v))
        for s in _janet_spaces(_min_gens(slice_gens), rest):
            u = list(s.u)
            u[last] = j
            Z = s.Z | {last} if j == hi else s.Z
            spaces.append(StanleySpace(tuple(u), Z))
    return spaces


def _min_gens(gens):
    return MonomialIdeal(len(gens[0]), tuple(gens)).gens


def janet(I: MonomialIdeal, widest_last: bool = False) -> StanleyDecomposition:
    """Janet decomposition: slice on the last variable, recurse on the slices.

    I = ⊕_{α<=j<β} x_n^j I_j ⊕ x_n^β I_β[x_n] with I_j = (G_α ∪ ... ∪ G_j) : x_n^j.
    With ``widest_last`` the variable with the widest exponent range is kept
    for the base case instead of x_1, so its factor drops out of the bound.
    """
    if I.is_zero:
        raise DomainError("janet needs a nonzero ideal")
    order = list(range(I.n))
    if widest_last:
        st = stats(I)
        widest = max(order, key=lambda k: (st.beta[k] - st.alpha[k], -k))
        order.remove(widest)
        order.insert(0, widest)
    spaces = _janet_spaces(list(I.gens), order)
    return StanleyDecomposition(QuotientModule.of_ideal(I), tuple(spaces))


# -- complete intersections -------------------------------------------------

def ci_bound(degrees) -> int:
    """Φ_m(d_1..d_m) = 1 + d_1 + d_1 d_2 + ... + d_1...d_{m-1}, degrees sorted."""
    d = sorted(degrees)
    total, term = 1, 1
    for x in d[:-1]:
        term *= x
        total += term
    return total


def _ci_spaces(gens, free):
    # gens pairwise coprime and supported on `free`; decomposes (gens) ∩ K[free]
    gens = sorted(gens, key=lambda u: (degree(u), u))
    u1, rest = gens[0], gens[1:]
    if not rest:
        return [StanleySpace(u1, free)]
    x = max(support(u1))
    if degree(u1) == 1:
        # I = x·S ⊕ (I'' ∩ K[free - x])
        return [StanleySpace(u1, free)] + _ci_spaces(rest, free - {x})
    # I = I'' ⊕ x·I',  I' = (u1/x, u2..um),  I'' = (u2..um) ∩ K[free - x]
    e = tuple(1 if k == x else 0 for k in range(len(u1)))
    shifted = [StanleySpace(mul(s.u, e), s.Z) for s in _ci_spaces([div(u1, e)] + rest, free)]
    return _ci_spaces(rest, free - {x}) + shifted


def ci_decomposition(I: MonomialIdeal) -> StanleyDecomposition:
    """Decomposition of a monomial complete intersection of length <= Φ_m."""
    if I.is_zero or I.is_unit:
        raise DomainError("ci_decomposition needs a proper nonzero ideal")
    if not I.is_complete_intersection:
        raise DomainError(f"{I} is not a complete intersection")
    spaces = _ci_spaces(list(I.gens), _all_vars(I.n))
    return StanleyDecomposition(QuotientModule.of_ideal(I), tuple(spaces))


def _pure_power_degrees(I: MonomialIdeal):
    if I.n != 3 or len(I.gens) != 3:
        return None
    d = [0, 0, 0]
    for u in I.gens:
        s = support(u)
        if len(s) != 1:
            return None
        (k,) = s
        d[k] = u[k]
    return d if all(d) else None


def ci3_decomposition(I: MonomialIdeal) -> StanleyDecomposition:
    """(x1^d1, x2^d2, x3^d3) as 1 + d1 + d2 + d3 explicit spaces."""
    d = _pure_power_degrees(I)
    if d is None:
        raise DomainError(f"{I} is not of the form (x1^d1, x2^d2, x3^d3)")
    d1, d2, d3 = d
    spaces = [StanleySpace((d1, d2, d3), frozenset({0, 1, 2}))]
    spaces += [StanleySpace((i, d2, 0), frozenset({1, 2})) for i in range(d1)]
    spaces += [StanleySpace((0, i, d3), frozenset({0, 2})) for i in range(d2)]
    spaces += [StanleySpace((d1, 0, i), frozenset({0, 1})) for i in range(d3)]
    return StanleyDecomposition(QuotientModule.of_ideal(I), tuple(spaces))


# -- principal quotients and primes -----------------------------------------

def principal_quotient(u: Monomial) -> StanleyDecomposition:
    """S/(u) with exactly deg(u) spaces."""
    n = len(u)
    if degree(u) == 0:
        raise DomainError("S/(1) is the zero module")
    spaces = []
    prefix = [0] * n
    for j, a in enumerate(u):
        for i in range(a):
            v = list(prefix)
            v[j] = i
            spaces.append(StanleySpace(tuple(v), _all_vars(n) - {j}))
        prefix[j] = a
    return StanleyDecomposition(QuotientModule.cyclic(MonomialIdeal(n, (u,))), tuple(spaces))


def prime_decomposition(P: MonomialIdeal) -> StanleyDecomposition:
    """(x_{i1}, ..., x_{im}) = ⊕_k x_{ik} K[x_{ik}, and every x not among x_{i1..i(k-1)}]."""
    idx = []
    for u in P.gens:
        if degree(u) != 1:
            raise DomainError(f"{P} is not generated by variables")
        idx.append(u.index(1))
    idx.sort()
    n = P.n
    spaces = [StanleySpace(tuple(1 if k == i else 0 for k in range(n)),
                           _all_vars(n) - set(idx[:pos]))
              for pos, i in enumerate(idx)]
    if not spaces:
        raise DomainError("the zero ideal has no generators")
    return StanleyDecomposition(QuotientModule.of_ideal(P), tuple(spaces))


# -- exact formulas ---------------------------------------------------------

def formula_n2(I: MonomialIdeal):
    """slength of an ideal of K[x1, x2]; returns ``(value, witness)``.

    With G(I) = {x1^a_i x2^b_i}, a_1 > ... > a_m and b_1 < ... < b_m, the
    value is min_i (a_i + b_i - a_m - b_1) + 1.  The witness puts a full
    space at the minimizing generator and fills the remaining columns and
    rows with one-variable strips.
    """
    if I.n != 2:
        raise DomainError("formula_n2 needs exactly two variables")
    if I.is_zero:
        raise DomainError("formula_n2 needs a nonzero ideal")
    gens = sorted(I.gens, key=lambda u: -u[0])
    v = (gens[-1][0], gens[0][1])
    red = [div(u, v) for u in gens]
    best = min(range(len(red)), key=lambda i: (sum(red[i]), i))
    ai, bi = red[best]
    value = ai + bi + 1

    def member(p, q):
        return any(a <= p and b <= q for a, b in red)

    spaces = [StanleySpace((ai, bi), frozenset({0, 1}))]
    for col in range(ai):
        k = next(q for q in range(red[0][1] + red[-1][1] + 1) if member(col, q))
        spaces.append(StanleySpace((col, k), frozenset({1})))
    for row in range(bi):
        t = next(p for p in range(red[0][0] + 1) if member(p, row))
        spaces.append(StanleySpace((t, row), frozenset({0})))
    reduced = StanleyDecomposition(QuotientModule.of_ideal(MonomialIdeal(2, tuple(red))),
                                   tuple(spaces))
    return value, scale_decomposition(reduced, v)


def formula_m2(I: MonomialIdeal):
    """slength of a two-generated ideal; returns ``(value, witness)``.

    value = min(deg u1, deg u2) - deg gcd(u1, u2) + 1.  The witness factors
    out the gcd and decomposes the remaining complete intersection.
    """
    if len(I.gens) != 2:
        raise DomainError("formula_m2 needs exactly two minimal generators")
    u1, u2 = I.gens
    g = common_divisor(I)
    value = min(degree(u1), degree(u2)) - degree(g) + 1
    witness = scale_decomposition(ci_decomposition(colon(I, g)), g)
    return value, witness

"""Shared strategies and brute-force reference checks for the tests."""
from itertools import combinations, product

from hypothesis import assume, strategies as st

from slength.monomials import MonomialIdeal, QuotientModule, intersect


def brute_member(gens, m):
    """m is a multiple of some generator, straight from the definition."""
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def box(bounds):
    return product(*(range(b + 1) for b in bounds))


def in_space(s, m):
    return all(b >= a if j in s.Z else b == a for j, (a, b) in enumerate(zip(s.u, m)))


def brute_verify(D, bounds):
    """Check the partition property on every point of the box directly."""
    Q = D.module
    for m in box(bounds):
        want = brute_member(Q.J.gens, m) and not brute_member(Q.I.gens, m)
        hits = sum(in_space(s, m) for s in D.spaces)
        if hits != (1 if want else 0):
            return False
    return True


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def ideals(draw, n=None, max_n=4, max_exp=3, max_gens=4, min_gens=1):
    n = draw(st.integers(1, max_n)) if n is None else n
    gens = draw(st.lists(monomials(n, max_exp), min_size=min_gens, max_size=max_gens))
    return MonomialIdeal(n, tuple(gens))


def proper_ideals(**kw):
    return ideals(**kw).filter(lambda I: not I.is_zero and not I.is_unit)


@st.composite
def squarefree_ideals(draw, n=None, max_n=4, max_gens=4):
    return draw(ideals(n=n, max_n=max_n, max_exp=1, max_gens=max_gens))


@st.composite
def squarefree_modules(draw, max_n=4, n=None):
    """J/I with I ⊊ J squarefree; I is J ∩ K or zero, J may be the unit ideal."""
    n = draw(st.integers(1, max_n)) if n is None else n
    J = draw(squarefree_ideals(n=n))
    K = draw(squarefree_ideals(n=n, max_gens=3) | st.just(MonomialIdeal(n, ())))
    I = intersect(J, K) if not K.is_zero else K
    assume(I != J and not J.is_zero)
    return QuotientModule(J, I)


@st.composite
def general_modules(draw, max_n=3, max_exp=3):
    """J/I with I = J ∩ K or zero; J may be the unit ideal."""
    n = draw(st.integers(1, max_n))
    J = draw(ideals(n=n, max_exp=max_exp, max_gens=3))
    K = draw(ideals(n=n, max_exp=max_exp, max_gens=2) | st.just(MonomialIdeal(n, ())))
    I = intersect(J, K) if not K.is_zero else K
    assume(not J.is_zero and I != J)
    return QuotientModule(J, I)


def random_squarefree_module(rng, n):
    """Non-hypothesis version for fixed-size random sweeps."""
    while True:
        def rand_ideal(k):
            gens = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(k)]
            return MonomialIdeal(n, tuple(gens))
        J = rand_ideal(rng.randint(1, 4))
        if J.is_zero:
            continue
        if rng.random() < 0.3:
            I = MonomialIdeal(n, ())
        else:
            I = intersect(J, rand_ideal(rng.randint(1, 3)))
        if I != J:
            return QuotientModule(J, I)


def random_ideal(rng, n, max_exp, max_gens, min_gens=1):
    while True:
        k = rng.randint(min_gens, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
        I = MonomialIdeal(n, tuple(gens))
        if not I.is_zero and not I.is_unit and len(I.gens) >= min_gens:
            return I


def realizable_complexes(n):
    """Every Δ(J/I) over n variables, as (J, I) pairs of squarefree ideals.

    Squarefree monomial ideals correspond to up-sets of the Boolean lattice, so
    all pairs of up-sets U_I ⊊ U_J give every realizable relative complex.
    """
    subsets = list(range(1 << n))
    upsets = []
    for mask in range(1 << (1 << n)):
        members = [s for s in subsets if mask >> s & 1]
        if all(mask >> (s | 1 << j) & 1 for s in members for j in range(n)):
            upsets.append(members)

    def to_ideal(members):
        gens = [tuple(s >> j & 1 for j in range(n)) for s in members]
        return MonomialIdeal(n, tuple(gens))

    ids = [to_ideal(u) for u in upsets]
    sets = [set(u) for u in upsets]
    for a, b in combinations(range(len(ids)), 2):
        for small, big in ((a, b), (b, a)):
            if sets[small] < sets[big]:
                yield QuotientModule(ids[big], ids[small])


# worked examples
from slength.monomials import ideal  # noqa: E402
from slength.decomposition import StanleyDecomposition, space  # noqa: E402

MAXIMAL3 = ideal(3, "x1", "x2", "x3")
THREE_GEN_LQ = ideal(3, "x1^2*x2", "x1*x2*x3", "x1^3*x3")
SQF_FOUR = ideal(4, "x1*x2", "x1*x3", "x1*x4", "x2*x3*x4")
NO_LQ_FOUR = ideal(4, "x1^2*x2", "x1^2*x3", "x1^2*x4", "x2*x3*x4")


def decomp(I, *spaces):
    """decomp(I, ("x1", [1, 2]), ...) with 1-based variable indices."""
    from slength.monomials import parse_monomial
    Q = QuotientModule.of_ideal(I) if isinstance(I, MonomialIdeal) else I
    return StanleyDecomposition(Q, tuple(
        space(parse_monomial(u, Q.n), {z - 1 for z in Z}) for u, Z in spaces))


def maximal_nested():
    return decomp(MAXIMAL3, ("x1", [1, 2, 3]), ("x2", [2, 3]), ("x3", [3]))


def maximal_deep():
    return decomp(MAXIMAL3, ("x1", [1, 2]), ("x2", [2, 3]), ("x3", [1, 3]),
                  ("x1*x2*x3", [1, 2, 3]))


def sqf_four_deep():
    return decomp(SQF_FOUR, ("x2*x3*x4", [1, 2, 3, 4]), ("x1*x2", [1, 2, 4]),
                  ("x1*x3", [1, 2, 3]), ("x1*x4", [1, 3, 4]))


def no_lq_witness():
    return decomp(NO_LQ_FOUR, ("x2*x3*x4", [1, 2, 3, 4]), ("x1^2*x2", [1, 2, 4]),
                  ("x1^2*x3", [1, 2, 3]), ("x1^2*x4", [1, 3, 4]))

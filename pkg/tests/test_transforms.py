import pytest
from hypothesis import assume, given, settings, strategies as st

from slength import transforms as T
from slength.constructions import prime_decomposition, principal_quotient
from slength.decomposition import StanleyDecomposition, space, verify
from slength.errors import TrivialQuotient
from slength.monomials import MonomialIdeal, QuotientModule, ideal
from slength.solver import best_witness

from support import (MAXIMAL3, decomp, maximal_nested, general_modules, ideals, monomials,
                     squarefree_modules)


def _D(I):
    return best_witness(QuotientModule.of_ideal(I))


# -- scaling, colon, extension ----------------------------------------------

def test_scale_examples():
    D = maximal_nested()
    assert T.scale_decomposition(D, (0, 0, 0)) == D
    P = decomp(ideal(2, "x1"), ("x1", [1, 2]))
    S = T.scale_decomposition(P, (0, 1))
    assert S.module.J == ideal(2, "x1*x2") and S.spaces == (space((1, 1), {0, 1}),)
    S = T.scale_decomposition(D, (1, 0, 0))
    assert S.module.J == ideal(3, "x1^2", "x1*x2", "x1*x3")
    assert len(S) == 3 and verify(S)


def test_colon_examples():
    D = decomp(ideal(2, "x1*x2"), ("x1*x2", [1, 2]))
    C = T.colon_transform(D, (0, 1))
    assert C.module.J == ideal(2, "x1") and C.spaces == (space((1, 0), {0, 1}),)
    I = ideal(2, "x1^2", "x1*x2")
    D = _D(I)
    assert len(D) == 2
    C = T.colon_transform(D, (1, 0))
    assert C.module.J == ideal(2, "x1", "x2") and verify(C) and len(C) <= 2


def test_colon_drops_spaces_missing_the_variable():
    D = decomp(ideal(3, "x1*x2", "x1*x3"), ("x1*x2", [1, 2, 3]), ("x1*x3", [1, 3]))
    assert verify(D)
    # x2 neither divides x1x3 nor lies in {x1, x3}: that space disappears
    C = T.colon_transform(D, (0, 1, 0))
    assert C.module.J == ideal(3, "x1")
    assert C.spaces == (space((1, 0, 0), {0, 1, 2}),)
    with pytest.raises(TrivialQuotient):
        T.colon_transform(decomp(ideal(1, "x1"), ("x1", [1])), (1,))


def test_extend_examples():
    P = decomp(ideal(1, "x1"), ("x1", [1]))
    E = T.extend_variable(P)
    assert E.module.J == ideal(2, "x1") and len(E) == 1 and verify(E)
    E = T.extend_variable(maximal_nested())
    assert E.module.n == 4 and len(E) == 3 and verify(E)
    assert len(T.restrict_last_variable(E)) <= 3
    assert T.restrict_last_variable(E) == maximal_nested()


# -- polarization -----------------------------------------------------------

def test_polarize_examples():
    P, pmap = T.polarize(ideal(1, "x1^2"))
    assert P == ideal(2, "x1*x2") and pmap.variable_names() == ["x11", "x12"]
    P, pmap = T.polarize(ideal(2, "x1^2", "x1*x2"))
    # x11 x12 and x11 x21 in the variables (x11, x12, x21)
    assert P == MonomialIdeal(3, ((1, 1, 0), (1, 0, 1)))
    assert T.polarize_stepwise(ideal(2, "x1^2", "x1*x2"))[0] == P
    P, _ = T.polarize(MAXIMAL3)
    assert P == MAXIMAL3


def test_polarize_decomposition_one_variable():
    D = decomp(ideal(1, "x1^2"), ("x1^2", [1]))
    E = T.polarize_decomposition(D, 0)
    # Φ(x1^2) = y·x1, y appended as the second variable
    assert E.module.J == ideal(2, "x1*x2")
    assert E.spaces == (space((1, 1), {0, 1}),)
    assert verify(E)


def test_polarize_squarefree_is_identity_up_to_y():
    D = maximal_nested()
    E = T.polarize_decomposition(D, 0)
    assert [s.u[:3] for s in E.spaces] == [s.u for s in D.spaces]
    assert verify(E)


# -- radical ----------------------------------------------------------------

def test_radical_examples():
    D = maximal_nested()
    R = T.radical_decomposition(D)
    assert R.spaces == D.spaces
    D = decomp(ideal(1, "x1^2"), ("x1^2", [1]))
    R = T.radical_decomposition(D)
    assert R.module.J == ideal(1, "x1") and R.spaces == (space((1,), {0}),)
    # a space whose pinned exponent is not a multiple of 2 is dropped
    I = ideal(2, "x1^2", "x2^2")
    D = StanleyDecomposition(QuotientModule.of_ideal(I), (
        space((2, 0), {0, 1}), space((0, 2), {1}), space((1, 2), {1})))
    assert verify(D)
    R = T.radical_decomposition(D)
    assert len(R) == 2 and verify(R)  # x1 x2^2 K[x2] has x1 exponent 1 pinned


# -- intersections and sums ---------------------------------------------------

def test_intersection_examples():
    A = decomp(ideal(2, "x1"), ("x1", [1, 2]))
    B = decomp(ideal(2, "x2"), ("x2", [1, 2]))
    X = T.intersect_decompositions(A, B)
    assert X.spaces == (space((1, 1), {0, 1}),) and verify(X)
    P = prime_decomposition(ideal(4, "x1", "x2"))
    R = prime_decomposition(ideal(4, "x3", "x4"))
    X = T.intersect_decompositions(P, R)
    assert verify(X) and len(X) <= 4
    assert T.space_intersection(space((1, 0), {0}), space((0, 1), {1})) is None


def test_sum_with_principal_quotient():
    A = decomp(ideal(2, "x1"), ("x1", [1, 2]))
    B = decomp(ideal(2, "x2"), ("x2", [1, 2]))
    S = T.sum_decompositions(A, B)
    assert S.module.J == ideal(2, "x1", "x2") and verify(S) and len(S) == 2


def test_cyclic_of_intersection():
    Sa = principal_quotient((1, 0))
    Sb = principal_quotient((0, 1))
    A = decomp(ideal(2, "x1"), ("x1", [1, 2]))
    X = T.cyclic_of_intersection(Sa, Sb, A)
    assert X.module == QuotientModule.cyclic(ideal(2, "x1*x2")) and verify(X)


# -- properties -------------------------------------------------------------

@given(general_modules(), monomials(3, 2))
@settings(max_examples=60, deadline=None)
def test_scale_and_extend_preserve_length(Q, u):
    u = u[:Q.n]
    D = best_witness(Q)
    for E in (T.scale_decomposition(D, u), T.extend_variable(D)):
        assert verify(E) and len(E) == len(D)


@given(general_modules(), st.data())
@settings(max_examples=60, deadline=None)
def test_colon_transform_verifies(Q, data):
    v = data.draw(monomials(Q.n, 2))
    try:
        target = T.colon_module(Q, v)
    except TrivialQuotient:
        return
    assume(not (Q.is_ideal and target.J.is_unit))
    D = best_witness(Q)
    C = T.colon_transform(D, v)
    assert C.module == target and verify(C) and len(C) <= len(D)
    P = T.colon_pullback(D, v)
    assert P.module == target and verify(P) and len(P) <= len(D)


@given(general_modules())
@settings(max_examples=60, deadline=None)
def test_polarize_decomposition_preserves_length(Q):
    D = best_witness(Q)
    E, pmap = T.polarize_decomposition_full(D)
    polar, _ = T.polarize(Q)
    assert E.module == polar
    assert verify(E) and len(E) == len(D)


@given(general_modules(max_n=3))
@settings(max_examples=60, deadline=None)
def test_polarize_stepwise_matches_direct(Q):
    assert T.polarize_stepwise(Q)[0] == T.polarize(Q)[0]
    polar, pmap = T.polarize(Q.J)
    assert len(polar.gens) == len(Q.J.gens)
    for u in Q.J.gens:
        assert sum(pmap.monomial(u)) == sum(u)


@given(general_modules())
@settings(max_examples=60, deadline=None)
def test_radical_decomposition(Q):
    try:
        target = T.radical_module(Q)
    except TrivialQuotient:
        return
    D = best_witness(Q)
    R = T.radical_decomposition(D)
    assert R.module == target and verify(R) and len(R) <= len(D)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_intersection_length_bound(data):
    n = data.draw(st.integers(1, 3))
    Q1 = data.draw(squarefree_modules(n=n))
    Q2 = data.draw(squarefree_modules(n=n))
    try:
        target = T.intersect_modules(Q1, Q2)
    except TrivialQuotient:
        return
    D1, D2 = best_witness(Q1), best_witness(Q2)
    X = T.intersect_decompositions(D1, D2)
    assert X.module == target and verify(X) and len(X) <= len(D1) * len(D2)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_sum_decomposition_verifies(data):
    n = data.draw(st.integers(1, 3))
    I = data.draw(ideals(n=n, max_exp=2, max_gens=2))
    J = data.draw(ideals(n=n, max_exp=2, max_gens=2))
    assume(not I.is_zero and not J.is_zero and not I.is_unit)
    S = T.sum_decompositions(_D(I), _D(J))
    assert verify(S)


@given(squarefree_modules(max_n=3))
@settings(max_examples=40, deadline=None)
def test_symbolic_pullback(Q):
    try:
        big = T.symbolic_power_module(Q, 2)
    except TrivialQuotient:
        return
    D = best_witness(big)
    P = T.symbolic_pullback(D, Q, 2)
    assert P.module == Q and verify(P) and len(P) <= len(D)

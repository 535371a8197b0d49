import pytest
from hypothesis import given, settings, strategies as st

from slength.decomposition import measure, verify
from slength.errors import DomainError
from slength.linquot import (
    decomposition_from_order, find_linear_order, is_linear_order,
    prefix_decomposition_check,
)
from slength.monomials import ideal

from support import THREE_GEN_LQ, SQF_FOUR, NO_LQ_FOUR, MAXIMAL3, ideals


def test_is_linear_order_examples():
    assert is_linear_order(MAXIMAL3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    order = [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 1)]
    assert is_linear_order(SQF_FOUR, order)
    bad = [(0, 1, 1, 1), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]
    check = is_linear_order(SQF_FOUR, bad)
    assert not check and check.failing_index == 2
    assert check.colon == ideal(4, "x3*x4")


def test_order_must_be_a_permutation():
    with pytest.raises(ValueError):
        is_linear_order(MAXIMAL3, [(1, 0, 0), (0, 1, 0)])


def test_find_linear_order_examples():
    assert find_linear_order(THREE_GEN_LQ) is not None
    assert find_linear_order(NO_LQ_FOUR) is None
    assert find_linear_order(ideal(2, "x1^2*x2")) == [(2, 1)]


def test_decomposition_from_order_examples():
    D = decomposition_from_order(MAXIMAL3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert [(s.u, s.Z) for s in D.spaces] == [
        ((1, 0, 0), {0, 1, 2}), ((0, 1, 0), {1, 2}), ((0, 0, 1), {2})]
    D = decomposition_from_order(THREE_GEN_LQ, [(2, 1, 0), (1, 1, 1), (3, 0, 1)])
    assert verify(D)
    # spaces x1²x2·K[x1,x2,x3], x1x2x3·K[x2,x3], x1³x3·K[x1,x3]
    assert measure(D) == (3, 2)
    D = decomposition_from_order(SQF_FOUR, [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
                                         (0, 1, 1, 1)])
    assert measure(D) == (4, 2) and verify(D)
    with pytest.raises(DomainError):
        decomposition_from_order(SQF_FOUR, [(0, 1, 1, 1), (1, 1, 0, 0), (1, 0, 1, 0),
                                         (1, 0, 0, 1)])


def test_prefix_check_examples():
    order = find_linear_order(THREE_GEN_LQ)
    assert prefix_decomposition_check(THREE_GEN_LQ, order)
    from itertools import permutations
    assert not any(prefix_decomposition_check(NO_LQ_FOUR, list(p))
                   for p in permutations(NO_LQ_FOUR.gens))
    assert prefix_decomposition_check(ideal(2, "x1"), [(1, 0)])


@given(ideals(max_n=4, max_exp=2, max_gens=4), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_prefix_check_iff_linear(I, rnd):
    if I.is_zero or I.is_unit:
        return
    order = list(I.gens)
    rnd.shuffle(order)
    assert bool(is_linear_order(I, order)) == prefix_decomposition_check(I, order)

"""Tests for the brute-force oracle itself."""

import pytest

from chaincodes import (
    BudgetExceeded,
    LinearCode,
    eu_ring,
    extend,
    full_code,
    galois_ring,
    zero_code,
)
from chaincodes.oracle import (
    Budget,
    all_vectors,
    brute_dual,
    brute_is_constacyclic,
    brute_min_weight,
    brute_span,
    brute_trace_code,
    enumerate_cyclic_submodules,
    same_words,
)

Z9 = galois_ring(3, 1, 2)


def vec(*xs):
    return tuple(Z9.element([x]) for x in xs)


def test_all_vectors():
    vs = list(all_vectors(Z9, 2))
    assert len(vs) == 81 == len(set(vs))


def test_brute_span():
    words = brute_span(Z9, [vec(1, 1)])
    assert words == {vec(c, c) for c in range(9)}
    words = brute_span(Z9, [vec(1, 0), vec(0, 3)])
    assert len(words) == 27


def test_brute_dual():
    assert len(brute_dual(zero_code(Z9, 2))) == 81
    got = brute_dual(LinearCode(Z9, 2, [vec(1, 1)]))
    assert got == brute_span(Z9, [vec(1, 8)])
    assert same_words(LinearCode(Z9, 2, [vec(1, 8)]), got)


def test_enumerate_cyclic_submodules_tiny():
    # ideals of Z9: {0}, 3Z9, Z9
    codes = enumerate_cyclic_submodules(Z9, 1)
    assert [c.cardinality for c in codes] == [1, 3, 9]
    f3 = eu_ring(3, 1, 1)
    assert len(enumerate_cyclic_submodules(f3, 4)) == 8


def test_enumerate_deterministic():
    a = enumerate_cyclic_submodules(Z9, 2)
    b = enumerate_cyclic_submodules(Z9, 2)
    assert [c.key() for c in a] == [c.key() for c in b]


def test_brute_min_weight_and_constacyclic():
    rep = LinearCode(Z9, 4, [vec(1, 1, 1, 1)])
    assert brute_min_weight(rep) == 4
    assert brute_is_constacyclic(rep, Z9.one)
    assert not brute_is_constacyclic(rep, Z9.element([8]))


def test_brute_trace_zero():
    ext = extend(Z9, 2)
    z = zero_code(ext.top, 2)
    words = brute_trace_code(ext, z)
    assert words == {(Z9.zero, Z9.zero)}


def test_budget_enforced():
    tight = Budget(max_vectors=10, max_codewords=10)
    with pytest.raises(BudgetExceeded):
        list(all_vectors(Z9, 2, tight))
    with pytest.raises(BudgetExceeded):
        brute_span(Z9, [vec(1, 0), vec(0, 1)], tight)
    with pytest.raises(BudgetExceeded):
        enumerate_cyclic_submodules(Z9, 2, tight)

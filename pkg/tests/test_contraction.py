"""Tests for the concatenation map and contraction of cyclic codes."""

import warnings

import pytest

from chaincodes import (
    CyclotomicPartition,
    LinearCode,
    SingletonViolation,
    SpecError,
    concatenate,
    concatenation_code,
    context,
    contract_code,
    contract_dual,
    code_from_partition,
    constashift,
    dual_contraction_partition,
    full_code,
    galois_ring,
    make_partition,
    preimage_code,
    weight,
    zero_code,
)
from chaincodes import oracle

Z9 = galois_ring(3, 1, 2)
NEG = Z9.element([8])  # -1


def vec(*xs):
    return tuple(Z9.element([x]) for x in xs)


def paper_code_20():
    ctx = context(Z9, 20)
    p = make_partition(
        ctx.universe, 2, {0: 2, 1: 0, 2: 2, 4: 2, 5: 1, 10: 2, 11: 2}
    )
    return code_from_partition(ctx, p)


def test_concatenate_frozen():
    assert concatenate(vec(1, 2), NEG, 2) == vec(8, 7, 1, 2)
    v = vec(1, 2, 3)
    assert concatenate(v, Z9.one, 1) == v


def test_concatenate_commutes_with_shifts():
    for xs in [(1, 0, 4), (2, 2, 2), (5, 7, 0)]:
        v = vec(*xs)
        lhs = concatenate(constashift(v, NEG), NEG, 2)
        rhs = constashift(concatenate(v, NEG, 2), Z9.one)
        assert lhs == rhs


def test_concatenation_code():
    assert concatenation_code(zero_code(Z9, 2), NEG, 2).is_zero()
    big = concatenation_code(full_code(Z9, 2), NEG, 2)
    assert big.type == (2, 0) and big.length == 4
    with pytest.raises(SpecError):
        concatenation_code(full_code(Z9, 2), Z9.element([2]), 2)  # 2^2 != 1
    skew = LinearCode(Z9, 2, [vec(1, 2)])
    with pytest.raises(SpecError):
        concatenation_code(skew, Z9.one, 2)  # not 1-constacyclic


def test_contract_paper_instance_20():
    c = paper_code_20()
    assert c.type == (4, 2)
    res = contract_code(c, 2)
    assert res.gamma == NEG
    assert res.omega == 1
    k = res.code
    assert k.type == (4, 2)
    assert k.cardinality == 3**10
    assert oracle.brute_is_constacyclic(k, NEG)
    assert k.same_code(k.dual())  # self-dual
    assert contract_dual(res, 2).same_code(k)
    assert concatenation_code(k, NEG, 2).same_code(c)


def test_contract_zero_code():
    res = contract_code(zero_code(Z9, 20), 2)
    assert res.code.is_zero()
    assert res.gamma == Z9.one
    assert res.omega == 0


def test_contract_singleton_violation():
    ctx = context(Z9, 20)
    p = make_partition(
        ctx.universe, 2, {0: 2, 1: 0, 2: 0, 4: 2, 5: 2, 10: 2, 11: 2}
    )
    c = code_from_partition(ctx, p)
    with pytest.raises(SingletonViolation):
        contract_code(c, 2)


def test_contract_bad_u():
    with pytest.raises(SpecError):
        contract_code(zero_code(Z9, 20), 3)


def test_contract_derived_order_warning():
    # u = 4, information coset {2, 6} mod 8: omega = 2, gcd(2, 4) = 2
    ctx = context(Z9, 8)
    p = make_partition(ctx.universe, 2, {0: 2, 1: 2, 2: 0, 4: 2, 5: 2})
    c = code_from_partition(ctx, p)
    with pytest.warns(UserWarning, match="order"):
        res = contract_code(c, 4)
    assert Z9.multiplicative_order(res.gamma) == 2


def test_weight_relation():
    c = paper_code_20()
    res = contract_code(c, 2)
    for w in res.code.codewords():
        assert weight(concatenate(w, res.gamma, 2)) == 2 * weight(w)


def test_preimage_of_concatenation():
    k = LinearCode(Z9, 2, [vec(3, 0), vec(0, 3)])
    assert oracle.brute_is_constacyclic(k, NEG)
    big = concatenation_code(k, NEG, 2)
    assert preimage_code(big, NEG, 2).same_code(k)


def test_dual_contraction_partition():
    res = contract_code(paper_code_20(), 2)
    assert dual_contraction_partition(res, 2) == res.partition

"""Tests for evaluation codes, trace codes, and the partition bijection."""

import pytest

from chaincodes import (
    CyclotomicPartition,
    LinearCode,
    NotCyclic,
    closure_code,
    code_from_partition,
    constashift,
    context,
    count_cyclic_codes,
    decompose_cyclic,
    enumerate_cyclic_codes,
    eu_ring,
    extend,
    full_code,
    galois_ring,
    intersect_codes,
    irreducible_components,
    irreducible_cyclic_code,
    is_constacyclic,
    lrs_code,
    make_partition,
    psi,
    sum_codes,
    trace_eval_code,
    zero_code,
)
from chaincodes import oracle

Z9 = galois_ring(3, 1, 2)
CTX4 = context(Z9, 4)


def subsets(universe):
    ell = universe.ell
    for mask in range(1 << ell):
        yield universe.subset([z for z in range(ell) if mask >> z & 1])


def test_lrs_basics():
    u = CTX4.universe
    assert lrs_code(CTX4, u.subset([0])).same_code(
        LinearCode(CTX4.ext.top, 4, [(CTX4.ext.top.one,) * 4])
    )
    assert lrs_code(CTX4, u.empty()).is_zero()
    assert lrs_code(CTX4, u.full()).same_code(full_code(CTX4.ext.top, 4))
    for a in subsets(u):
        assert lrs_code(CTX4, a).type == (len(a),) + (0,)


def test_lrs_lattice_properties():
    u = CTX4.universe
    import itertools

    small = [u.subset(s) for s in ([], [0], [1], [0, 2], [1, 3], [0, 1, 2])]
    for a, b in itertools.product(small, repeat=2):
        assert lrs_code(CTX4, a.union(b)).same_code(
            sum_codes(lrs_code(CTX4, a), lrs_code(CTX4, b))
        )
        assert lrs_code(CTX4, a.intersection(b)).same_code(
            intersect_codes(lrs_code(CTX4, a), lrs_code(CTX4, b))
        )


def test_lrs_dual_and_closure():
    u = CTX4.universe
    ext = CTX4.ext
    for a in subsets(u):
        assert lrs_code(CTX4, a).dual().same_code(lrs_code(CTX4, a.dual()))
        assert closure_code(ext, lrs_code(CTX4, a)).same_code(
            lrs_code(CTX4, a.closure())
        )


def test_trace_eval_rank_and_closure():
    u = CTX4.universe
    assert trace_eval_code(CTX4, u.subset([0])).same_code(
        LinearCode(Z9, 4, [(Z9.one,) * 4])
    )
    assert trace_eval_code(CTX4, u.subset([1])).rank == 2
    for a in subsets(u):
        c = trace_eval_code(CTX4, a)
        assert c.type == (len(a.closure()),) + (0,)
        assert c.same_code(trace_eval_code(CTX4, a.closure()))
        assert is_constacyclic(c, Z9.one)


def test_psi():
    ext = CTX4.ext
    # coset {1,3} has m_z = 2 = m, so the subextension is all of S
    images = {a: psi(CTX4, 1, a) for a in ext.top.elements()}
    assert len(set(images.values())) == len(images)  # injective
    comp = irreducible_cyclic_code(CTX4, 1)
    assert all(w in comp for w in images.values())
    # shift intertwining: psi(eta^{-z} a) = shift(psi(a))
    zeta = CTX4.eta_pow(-1)
    for a in list(ext.top.elements())[:30]:
        assert psi(CTX4, 1, zeta * a) == constashift(psi(CTX4, 1, a), Z9.one)


def test_psi_rejects_outside_subextension():
    ctx = context(Z9, 8)  # coset {0} has m_z = 1 < m
    outside = ctx.ext.xi
    with pytest.raises(Exception):
        psi(ctx, 0, outside)


def test_code_from_partition_extremes():
    u = CTX4.universe
    full_p = make_partition(u, 2, {0: 0, 1: 0, 2: 0})
    assert code_from_partition(CTX4, full_p).same_code(full_code(Z9, 4))
    zero_p = make_partition(u, 2, {0: 2, 1: 2, 2: 2})
    assert code_from_partition(CTX4, zero_p).is_zero()


def test_decompose_extremes():
    assert decompose_cyclic(full_code(Z9, 4)).to_assignment() == {
        0: 0,
        1: 0,
        2: 0,
    }
    assert decompose_cyclic(zero_code(Z9, 4)).to_assignment() == {
        0: 2,
        1: 2,
        2: 2,
    }


def test_decompose_rejects_non_cyclic():
    c = LinearCode(Z9, 4, [[Z9.one, Z9.zero, Z9.zero, Z9.zero]])
    with pytest.raises(NotCyclic):
        decompose_cyclic(c)
    with pytest.raises(NotCyclic):
        decompose_cyclic(zero_code(Z9, 3))  # 3 shares a factor with q


def test_round_trip_all_partitions():
    for partition, c in enumerate_cyclic_codes(Z9, 4):
        assert decompose_cyclic(c) == partition
        assert is_constacyclic(c, Z9.one)


def test_irreducible_components():
    assert irreducible_components(
        LinearCode(Z9, 4, [(Z9.one,) * 4])
    ) == [(0, 0)]
    theta_full = LinearCode(
        Z9, 4, [[Z9.theta if i == j else Z9.zero for j in range(4)] for i in range(4)]
    )
    assert irreducible_components(theta_full) == [(1, 0), (1, 1), (1, 2)]
    assert irreducible_components(zero_code(Z9, 4)) == []


def test_direct_sum_of_components():
    comps = [irreducible_cyclic_code(CTX4, z) for z in (0, 1, 2)]
    total = comps[0]
    for c in comps[1:]:
        assert intersect_codes(total, c).is_zero()
        total = sum_codes(total, c)
    assert total.same_code(full_code(Z9, 4))


def test_dual_partition_is_tilde_dual():
    for partition, c in enumerate_cyclic_codes(Z9, 4):
        assert c.dual().same_code(
            code_from_partition(CTX4, partition.tilde_dual())
        )


def test_counts():
    assert count_cyclic_codes(Z9, 4) == (27, 8)
    assert count_cyclic_codes(eu_ring(3, 1, 1), 4) == (8, 8)
    assert count_cyclic_codes(Z9, 20) == (3**7, 2**7)


def test_field_case_matches_oracle():
    F3 = eu_ring(3, 1, 1)
    subs = oracle.enumerate_cyclic_submodules(F3, 4)
    assert len(subs) == 8
    rebuilt = [c for _, c in enumerate_cyclic_codes(F3, 4)]
    for c in subs:
        assert any(c.same_code(r) for r in rebuilt)

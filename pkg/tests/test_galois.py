"""Tests for Galois extensions: embedding, Frobenius, trace, xi."""

import pytest

from chaincodes import (
    SpecError,
    eu_ring,
    extend,
    galois_ring,
    xi_multiplicative_order,
)


def test_extend_z9_shape():
    ext = extend(galois_ring(3, 1, 2), 2)
    assert ext.top.q == 9 and ext.top.size == 81
    assert ext.order == 8  # Teichmuller group of GR(9, 2)
    assert ext.xi.coords == (7, 7)
    assert xi_multiplicative_order(ext) == 8


def test_xi_pow_table():
    ext = extend(galois_ring(3, 1, 2), 2)
    acc = ext.top.one
    for e in range(170):
        assert ext.xi_pow(e) == acc
        acc = acc * ext.xi


def test_root_of_unity():
    ext = extend(galois_ring(3, 1, 2), 2)
    for ell in (1, 2, 4, 8):
        eta = ext.root_of_unity(ell)
        assert ext.top.multiplicative_order(eta) == ell
    with pytest.raises(SpecError):
        ext.root_of_unity(3)
    with pytest.raises(SpecError):
        ext.root_of_unity(5)


@pytest.mark.parametrize(
    "base,m",
    [
        (galois_ring(3, 1, 2), 2),
        (eu_ring(3, 1, 2), 2),
        (galois_ring(2, 2, 1), 2),
        (galois_ring(3, 2, 2), 2),
        (eu_ring(2, 2, 2), 2),
    ],
)
def test_embedding_is_ring_hom(base, m):
    ext = extend(base, m)
    elems = base.elements()
    assert ext.embed(base.one) == ext.top.one
    for a in elems:
        for b in elems:
            assert ext.embed(a + b) == ext.embed(a) + ext.embed(b)
            assert ext.embed(a * b) == ext.embed(a) * ext.embed(b)
    # injectivity via the unembed table
    for a in elems:
        assert ext.unembed(ext.embed(a)) == a


def test_frobenius_fixes_exactly_the_base():
    ext = extend(galois_ring(3, 1, 2), 2)
    fixed = [a for a in ext.top.elements() if ext.frobenius(a) == a]
    assert len(fixed) == ext.base.size
    assert all(ext.in_base(a) for a in fixed)


def test_frobenius_is_ring_automorphism():
    ext = extend(galois_ring(3, 1, 2), 2)
    elems = ext.top.elements()
    for a in elems[:20]:
        for b in elems[:20]:
            assert ext.frobenius(a * b) == ext.frobenius(a) * ext.frobenius(b)
            assert ext.frobenius(a + b) == ext.frobenius(a) + ext.frobenius(b)
    for a in elems:
        assert ext.frobenius(a, ext.m) == a


def test_trace():
    ext = extend(galois_ring(3, 1, 2), 2)
    base = ext.base
    # Tr(1) = m
    assert ext.trace(ext.top.one) == base.from_int(2)
    # R-linearity and surjectivity
    image = set()
    for a in ext.top.elements():
        t = ext.trace(a)
        image.add(t)
        for c in base.elements():
            assert ext.trace(ext.embed(c) * a) == c * t
    assert image == set(base.elements())


def test_trace_xi_pow_agrees():
    ext = extend(galois_ring(3, 1, 2), 2)
    for e in range(20):
        assert ext.trace_xi_pow(e) == ext.trace(ext.xi_pow(e))


def test_xi_coordinates_round_trip():
    ext = extend(galois_ring(3, 1, 2), 2)
    for a in ext.top.elements():
        coords = ext.xi_coordinates(a)
        assert len(coords) == ext.m
        acc = ext.top.zero
        for i, c in enumerate(coords):
            acc = acc + ext.embed(c) * ext.xi_pow(i)
        assert acc == a


def test_degree_one_extension_is_identity():
    base = galois_ring(3, 1, 2)
    ext = extend(base, 1)
    assert ext.top is base
    for a in base.elements():
        assert ext.embed(a) is a
        assert ext.trace(a) == a
        assert ext.frobenius(a) == a


def test_bigger_extension_trace_into_subring():
    # degree 6 over Z9, exercised lightly: trace lands in the base
    ext = extend(galois_ring(3, 1, 2), 6)
    assert ext.order == 3**6 - 1
    assert ext.trace(ext.top.one) == ext.base.from_int(6)
    t = ext.trace(ext.xi)
    assert t.ring is ext.base

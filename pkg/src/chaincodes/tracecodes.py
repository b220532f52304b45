"""Cyclic codes of length ell coprime to q, built from trace evaluations.

Fix a root of unity eta of order ell inside the degree-m extension S|R,
m = ord_ell(q).  Each q-cyclotomic coset [z] carries an irreducible cyclic
code with codewords (Tr(x eta^(z j)))_j, and every cyclic code over R is a
direct sum of theta-power multiples of these, one per coset.  The levels
form a (q, s)-cyclotomic partition of {0, ..., ell-1}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd

from .chainring import ChainRing, RingElement
from .cosets import (
    CosetSet,
    CosetUniverse,
    CyclotomicPartition,
    coset,
    count_classes,
    make_partition,
    representatives,
)
from .errors import NotCyclic, SpecError
from .galois import GaloisExtension, extend
from .modcodes import LinearCode, is_constacyclic, vscale


class EvalContext:
    """Shared evaluation data for cyclic codes of one length over one ring."""

    def __init__(self, ring: ChainRing, ell: int):
        if ell < 1:
            raise SpecError("length must be >= 1")
        if gcd(ring.q, ell) != 1:
            raise SpecError(f"length {ell} must be coprime to q = {ring.q}")
        self.ring = ring
        self.ell = ell
        self.universe = CosetUniverse(ell, ring.q)
        self.m = self.universe.m
        self.ext = extend(ring, self.m)
        self.w = (ring.q**self.m - 1) // ell
        self.eta = self.ext.xi_pow(self.w)

    def eta_pow(self, e: int) -> RingElement:
        return self.ext.xi_pow(self.w * (e % self.ell))


@lru_cache(maxsize=None)
def _context_cached(ring_key, ell):
    from .chainring import _ring_for_key

    return EvalContext(_ring_for_key(ring_key), ell)


def context(ring: ChainRing, ell: int) -> EvalContext:
    return _context_cached(ring.key, ell)


def _trace_rows(ctx: EvalContext, rep: int):
    """R-module generators of the irreducible cyclic code of the coset [rep]:
    rows (Tr(xi^k eta^(rep*j)))_j for k < m."""
    ext, w, ell = ctx.ext, ctx.w, ctx.ell
    rows = []
    for k in range(ext.m):
        rows.append(
            tuple(ext.trace_xi_pow(k + w * rep * j) for j in range(ell))
        )
    return rows


def irreducible_cyclic_code(ctx: EvalContext, z: int) -> LinearCode:
    """The minimal cyclic code whose nonzero exponents are the coset [z]."""
    rep = min(coset(ctx.universe, z).members)
    return LinearCode(ctx.ring, ctx.ell, _trace_rows(ctx, rep))


def trace_eval_code(ctx: EvalContext, exponents: CosetSet) -> LinearCode:
    """The free cyclic code of rank |closure(A)| supported on the q-closure
    of the exponent set A."""
    if exponents.universe != ctx.universe:
        raise SpecError("exponent set universe mismatch")
    exponents = exponents.closure()
    rows = []
    seen = set()
    for z in exponents:
        rep = min(coset(ctx.universe, z).members)
        if rep in seen:
            continue
        seen.add(rep)
        rows.extend(_trace_rows(ctx, rep))
    return LinearCode(ctx.ring, ctx.ell, rows)


def lrs_code(ctx: EvalContext, exponents: CosetSet) -> LinearCode:
    """The free S-linear code spanned by the monomial evaluation rows
    (1, eta^a, ..., eta^(a(ell-1))), a in A."""
    if exponents.universe != ctx.universe:
        raise SpecError("exponent set universe mismatch")
    rows = [
        tuple(ctx.eta_pow(a * j) for j in range(ctx.ell))
        for a in exponents
    ]
    return LinearCode(ctx.ext.top, ctx.ell, rows)


def psi(ctx: EvalContext, z: int, x: RingElement):
    """The codeword (Tr(x eta^(z j)))_j; x must be fixed by sigma^(m_z)."""
    if x.ring is not ctx.ext.top:
        raise SpecError("psi expects an element of the extension ring")
    m_z = len(coset(ctx.universe, z))
    if ctx.ext.frobenius(x, m_z) != x:
        raise SpecError(
            f"element is not in the degree-{m_z} subextension of coset {z}"
        )
    ext = ctx.ext
    return tuple(
        ext.trace(ext.top._mul(x, ctx.eta_pow(z * j))) for j in range(ctx.ell)
    )


def code_from_partition(
    ctx: EvalContext, partition: CyclotomicPartition
) -> LinearCode:
    """The cyclic code sum_t theta^t C_[z], z ranging over the level-t block."""
    ring = ctx.ring
    if partition.universe != ctx.universe:
        raise SpecError("partition universe mismatch")
    if partition.s != ring.s:
        raise SpecError(
            f"partition has {partition.s + 1} blocks, ring needs {ring.s + 1}"
        )
    rows = []
    for t in range(ring.s):
        scale = ring.theta_pow(t)
        block = partition.blocks[t]
        seen = set()
        for z in block:
            rep = min(coset(ctx.universe, z).members)
            if rep in seen:
                continue
            seen.add(rep)
            for g in _trace_rows(ctx, rep):
                rows.append(vscale(scale, g))
    return LinearCode(ring, ctx.ell, rows)


def decompose_cyclic(code: LinearCode) -> CyclotomicPartition:
    """Recover the (q, s)-cyclotomic partition of a cyclic code.

    Raises NotCyclic when the code is not shift-invariant (or its length
    shares a factor with q, leaving no eta to evaluate at).
    """
    ring = code.ring
    if gcd(ring.q, code.length) != 1:
        raise NotCyclic(
            f"length {code.length} is not coprime to q = {ring.q}"
        )
    if not is_constacyclic(code, ring.one):
        raise NotCyclic("code is not invariant under the cyclic shift")
    ctx = context(ring, code.length)
    s = ring.s
    assignment = {}
    size = 1
    for rep in representatives(ctx.universe):
        gens = _trace_rows(ctx, rep)
        level = s
        for t in range(s):
            scale = ring.theta_pow(t)
            if all(vscale(scale, g) in code for g in gens):
                level = t
                break
        assignment[rep] = level
        m_z = len(coset(ctx.universe, rep))
        size *= ring.q ** ((s - level) * m_z)
    if size != code.cardinality:
        raise NotCyclic(
            "code is not a direct sum of scaled irreducible cyclic codes"
        )
    return make_partition(ctx.universe, s, assignment)


def irreducible_components(code: LinearCode):
    """The pairs (t_z, z) with t_z < s in the direct-sum decomposition."""
    partition = decompose_cyclic(code)
    out = []
    for z in representatives(partition.universe):
        t = partition.level_of(z)
        if t < code.ring.s:
            out.append((t, z))
    return out


def count_cyclic_codes(ring: ChainRing, ell: int) -> tuple[int, int]:
    """((s+1)^n, 2^n) for n the number of q-cyclotomic cosets mod ell:
    total cyclic codes and free cyclic codes."""
    n = count_classes(CosetUniverse(ell, ring.q))
    return (ring.s + 1) ** n, 2**n


def enumerate_cyclic_codes(ring: ChainRing, ell: int):
    """Yield (partition, code) for every cyclic code of length ell, in the
    lexicographic order of level assignments over sorted representatives."""
    ctx = context(ring, ell)
    reps = representatives(ctx.universe)
    for levels in product(range(ring.s + 1), repeat=len(reps)):
        partition = make_partition(
            ctx.universe, ring.s, dict(zip(reps, levels))
        )
        yield partition, code_from_partition(ctx, partition)

"""Contraction of cyclic codes into constacyclic codes and back.

The concatenation map sends a length-n vector c to the length-un vector
(gamma^(u-1) c | ... | gamma c | c).  When gamma^u = 1 it carries
gamma-constacyclic codes to cyclic codes; contraction inverts it.  A cyclic
code of length un is a concatenation exactly when every exponent coset of
its information blocks sits in a single residue class omega mod u, and then
gamma = beta^(-omega) for beta the Teichmuller root of unity of order u.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

from .chainring import RingElement
from .cosets import CyclotomicPartition
from .errors import SingletonViolation, SpecError
from .modcodes import LinearCode, is_constacyclic, vscale, zero_code
from .tracecodes import context, decompose_cyclic


def concatenate(v, gamma: RingElement, u: int):
    """(gamma^(u-1) v | ... | gamma v | v)."""
    if u < 1:
        raise SpecError("u must be >= 1")
    ring = gamma.ring
    out = tuple(v)
    block = out
    for _ in range(u - 1):
        block = vscale(gamma, block)
        out = block + out
    return out


def concatenation_code(code: LinearCode, gamma: RingElement, u: int) -> LinearCode:
    """The cyclic code of length u*n concatenated from a gamma-constacyclic
    code of length n."""
    ring = code.ring
    if gamma.ring is not ring:
        raise SpecError("gamma must belong to the code's ring")
    if not ring.is_unit(gamma):
        raise SpecError("gamma must be a unit")
    if ring.pow(gamma, u) != ring.one:
        raise SpecError("gamma^u must be 1 for the concatenation to be cyclic")
    if not is_constacyclic(code, gamma):
        raise SpecError("code is not gamma-constacyclic")
    rows = [concatenate(g, gamma, u) for g in code.sf_rows]
    out = LinearCode(ring, u * code.length, rows)
    assert out.type == code.type
    return out


@dataclass(frozen=True)
class ContractionResult:
    code: LinearCode  # the contracted gamma-constacyclic code
    gamma: RingElement
    omega: int
    partition: CyclotomicPartition  # exponent partition of the cyclic input


def contract_code(code: LinearCode, u: int) -> ContractionResult:
    """Write a cyclic code of length u*n as the concatenation of a
    gamma-constacyclic code of length n.

    Raises NotCyclic when the input is not cyclic and SingletonViolation
    when its information exponents meet several residue classes mod u.
    """
    ring = code.ring
    if u < 1 or code.length % u:
        raise SpecError(f"u = {u} must divide the length {code.length}")
    n = code.length // u
    partition = decompose_cyclic(code)
    info = set()
    for block in partition.blocks[: ring.s]:
        info |= block.members
    if not info:
        return ContractionResult(zero_code(ring, n), ring.one, 0, partition)
    residues = {z % u for z in info}
    if len(residues) > 1:
        raise SingletonViolation(
            f"information exponents meet several residue classes mod {u}: "
            f"{sorted(residues)}"
        )
    omega = residues.pop()
    if u > 1 and gcd(omega, u) > 1:
        warnings.warn(
            f"gcd(omega, u) = {gcd(omega, u)} > 1: gamma has order "
            f"{u // gcd(omega, u)}, strictly below u",
            stacklevel=2,
        )
    ctx = context(ring, code.length)
    order = ctx.ext.order
    if order % u:
        raise SpecError(f"u = {u} does not divide q^m - 1 = {order}")
    gamma_top = ctx.ext.xi_pow(-omega * (order // u))
    gamma = ctx.ext.unembed(gamma_top)
    rows = []
    for g in code.sf_rows:
        tail = g[-n:]
        if concatenate(tail, gamma, u) != g:
            raise AssertionError(
                "generator does not follow the concatenation pattern"
            )
        rows.append(tail)
    contracted = LinearCode(ring, n, rows)
    assert contracted.type == code.type
    return ContractionResult(contracted, gamma, omega, partition)


def dual_contraction_partition(
    result: ContractionResult, u: int
) -> CyclotomicPartition:
    """The exponent partition of the dual cyclic code, via the star dual."""
    return result.partition.star_dual(u, result.omega)


def preimage_code(code: LinearCode, gamma: RingElement, u: int) -> LinearCode:
    """The preimage of a length-u*n code under the concatenation map.

    Uses the adjoint: <concat(k), d> = <k, T(d)> with T summing the blocks
    of d scaled by the matching gamma powers, so the preimage is the dual
    of T applied to the dual generators.
    """
    ring = code.ring
    if u < 1 or code.length % u:
        raise SpecError(f"u = {u} must divide the length {code.length}")
    n = code.length // u
    rows = []
    for g in code.dual().sf_rows:
        row = [ring.zero] * n
        for b in range(u):
            scale = ring.pow(gamma, u - 1 - b)
            for j in range(n):
                row[j] = row[j] + scale * g[b * n + j]
        rows.append(tuple(row))
    return LinearCode(ring, n, rows).dual()


def contract_dual(result: ContractionResult, u: int) -> LinearCode:
    """dual(K) through the star-dual partition of the concatenation.

    Builds the dual cyclic code from the star-dual partition and pulls it
    back through the concatenation map, without ever calling dual() on K.
    """
    from .tracecodes import code_from_partition, context

    ring = result.code.ring
    big_length = result.code.length * u
    ctx = context(ring, big_length)
    dual_big = code_from_partition(
        ctx, dual_contraction_partition(result, u)
    )
    # The dual contraction is gamma^(-1)-constacyclic.
    return preimage_code(dual_big, ring.inv(result.gamma), u)

"""Brute-force reference implementations, for cross-checking the fast paths.

Everything here works by exhaustive enumeration over vectors or codewords
and never calls the structural algorithms it is meant to check.  Budgets
bound the enumeration sizes; exceeding one raises BudgetExceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chainring import ChainRing
from .errors import BudgetExceeded
from .modcodes import LinearCode, constashift, vdot, weight

MAX_VECTORS = 10**7
MAX_CODEWORDS = 10**6


@dataclass(frozen=True)
class Budget:
    max_vectors: int = MAX_VECTORS
    max_codewords: int = MAX_CODEWORDS

    def check_vectors(self, count: int):
        if count > self.max_vectors:
            raise BudgetExceeded(
                f"{count} vectors exceed the budget of {self.max_vectors}"
            )

    def check_codewords(self, count: int):
        if count > self.max_codewords:
            raise BudgetExceeded(
                f"{count} codewords exceed the budget of {self.max_codewords}"
            )


class _PairMemo:
    """Memoized elementwise binary operation on vectors of ring elements."""

    def __init__(self, op):
        self.op = op
        self.memo = {}

    def __call__(self, u, v):
        memo = self.memo
        op = self.op
        out = []
        for pair in zip(u, v):
            c = memo.get(pair)
            if c is None:
                c = op(*pair)
                memo[pair] = c
            out.append(c)
        return tuple(out)


def all_vectors(ring: ChainRing, n: int, budget: Budget = Budget()):
    """Every vector of R^n, in the canonical element order."""
    budget.check_vectors(ring.size**n)

    def rec(i):
        if i == 0:
            yield ()
            return
        for prefix in rec(i - 1):
            for a in ring.elements():
                yield prefix + (a,)

    yield from rec(n)


def brute_span(ring: ChainRing, rows, budget: Budget = Budget(), _add=None):
    """The set of all R-linear combinations of the rows."""
    if not rows:
        return frozenset()
    add = _add or _PairMemo(lambda a, b: a + b)
    words = {(ring.zero,) * len(rows[0])}
    for g in rows:
        if g in words:
            continue  # words is already a module containing g
        scaled = [tuple(c * a for a in g) for c in ring.elements()]
        fresh = set()
        for cg in scaled:
            for w in words:
                fresh.add(add(w, cg))
        words = fresh
        budget.check_codewords(len(words))
    return frozenset(words)


def brute_codewords(code: LinearCode, budget: Budget = Budget()):
    budget.check_codewords(code.cardinality)
    words = brute_span(code.ring, list(code.generators), budget)
    if not words:
        words = frozenset({(code.ring.zero,) * code.length})
    return words


def brute_dual(code: LinearCode, budget: Budget = Budget()):
    """All vectors orthogonal to every generator, as a set."""
    gens = code.generators or ((code.ring.zero,) * code.length,)
    out = set()
    for v in all_vectors(code.ring, code.length, budget):
        if all(not vdot(v, g) for g in gens):
            out.add(v)
    return frozenset(out)


def brute_min_weight(code: LinearCode, budget: Budget = Budget()) -> int:
    words = brute_codewords(code, budget)
    return min(weight(w) for w in words if any(w))


def brute_is_constacyclic(code: LinearCode, gamma, budget: Budget = Budget()):
    words = brute_codewords(code, budget)
    return all(constashift(w, gamma) in words for w in words)


def _module_sum(a, b, add):
    """a + b for two additively closed codeword sets, by whole translates:
    x + b is either already present or disjoint from everything so far."""
    if len(b) > len(a):
        a, b = b, a
    out = set(a)
    for x in b:
        if x in out:
            continue
        out.update(add(x, y) for y in a)
    return frozenset(out)


def brute_cyclic_submodule_words(
    ring: ChainRing, n: int, budget: Budget = Budget()
):
    """Every shift-invariant submodule of R^n, as a sorted list of codeword
    sets: spans of single shift-orbits, closed under pairwise sums."""
    budget.check_vectors(ring.size**n)
    add = _PairMemo(lambda a, b: a + b)
    mul = _PairMemo(lambda c, a: c * a)
    units = [c for c in ring.elements() if ring.is_unit(c)]
    zero = (ring.zero,) * n
    found: set[frozenset] = {frozenset({zero})}
    seen_orbits: set[tuple] = set()
    for v in all_vectors(ring, n, budget):
        if not any(v):
            continue
        # Shifts and unit multiples of v span the same submodule; visit one
        # representative per class.
        variants = []
        w = v
        for _ in range(n):
            w = (w[-1],) + w[:-1]
            for c in units:
                variants.append(mul((c,) * n, w))
        canon = min(tuple(a.coords for a in x) for x in variants)
        if canon in seen_orbits:
            continue
        seen_orbits.add(canon)
        orbit = []
        w = v
        for _ in range(n):
            orbit.append(w)
            w = (w[-1],) + w[:-1]
        found.add(brute_span(ring, orbit, budget, _add=add))
    while True:
        fresh = set()
        for a, b in combinations(found, 2):
            if a <= b or b <= a:
                continue
            c = _module_sum(a, b, add)
            if c not in found:
                budget.check_codewords(len(c))
                fresh.add(c)
        if not fresh:
            break
        found |= fresh
    return sorted(
        found,
        key=lambda ws: (
            len(ws),
            sorted(tuple(a.coords for a in w) for w in ws),
        ),
    )


def enumerate_cyclic_submodules(
    ring: ChainRing, n: int, budget: Budget = Budget()
):
    """Every shift-invariant submodule of R^n as a LinearCode, in the
    deterministic order of brute_cyclic_submodule_words."""
    out = []
    for words in brute_cyclic_submodule_words(ring, n, budget):
        out.append(LinearCode(ring, n, sorted(words, key=_word_key)))
    return out


def _word_key(w):
    return tuple(a.coords for a in w)


def brute_trace_code(ext, code: LinearCode, budget: Budget = Budget()):
    """Componentwise trace image of an extension code, as a codeword set."""
    words = brute_codewords(code, budget)
    return frozenset(tuple(ext.trace(a) for a in w) for w in words)


def brute_res_subring(ext, code: LinearCode, budget: Budget = Budget()):
    """Codewords with every entry in the embedded base ring, read over R."""
    words = brute_codewords(code, budget)
    return frozenset(
        tuple(ext.unembed(a) for a in w)
        for w in words
        if all(ext.in_base(a) for a in w)
    )


def same_words(code: LinearCode, words) -> bool:
    """Does a structurally built code have exactly this codeword set?"""
    return code.cardinality == len(words) and all(w in code for w in words)

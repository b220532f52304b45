"""Combinatorics on Sigma_ell = {0, ..., ell-1}: q-cyclotomic cosets,
set operators, and (q, s)-cyclotomic partitions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from ._ints import divisors, euler_phi, multiplicative_order, prime_power_base
from .errors import SingletonViolation, SpecError


@dataclass(frozen=True)
class CosetUniverse:
    """The ambient modulus ell together with the acting prime power q."""

    ell: int
    q: int
    m: int = field(init=False)

    def __post_init__(self):
        if self.ell < 1:
            raise SpecError("ell must be >= 1")
        if self.q < 2 or prime_power_base(self.q) is None:
            raise SpecError("q must be a prime power >= 2")
        if gcd(self.q, self.ell) != 1:
            raise SpecError("q and ell must be coprime")
        object.__setattr__(self, "m", multiplicative_order(self.q, self.ell))

    def subset(self, members) -> "CosetSet":
        return CosetSet(self, frozenset(int(z) % self.ell for z in members))

    def full(self) -> "CosetSet":
        return self.subset(range(self.ell))

    def empty(self) -> "CosetSet":
        return CosetSet(self, frozenset())


@dataclass(frozen=True)
class CosetSet:
    """A subset of Sigma_ell, closed or not under multiplication by q."""

    universe: CosetUniverse
    members: frozenset[int]

    def __post_init__(self):
        if any(z < 0 or z >= self.universe.ell for z in self.members):
            raise SpecError("members must lie in {0, ..., ell-1}")

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, z):
        return z % self.universe.ell in self.members

    def __le__(self, other):
        return self.members <= other.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def union(self, other: "CosetSet") -> "CosetSet":
        return CosetSet(self.universe, self.members | other.members)

    def intersection(self, other: "CosetSet") -> "CosetSet":
        return CosetSet(self.universe, self.members & other.members)

    def difference(self, other: "CosetSet") -> "CosetSet":
        return CosetSet(self.universe, self.members - other.members)

    # -- the set operators -------------------------------------------------

    def closure(self) -> "CosetSet":
        """Smallest q-closed superset."""
        ell, q = self.universe.ell, self.universe.q
        out = set()
        for z in self.members:
            while z not in out:
                out.add(z)
                z = (z * q) % ell
        return CosetSet(self.universe, frozenset(out))

    def is_q_closed(self) -> bool:
        ell, q = self.universe.ell, self.universe.q
        return all((z * q) % ell in self.members for z in self.members)

    def multiples(self, c: int) -> "CosetSet":
        ell = self.universe.ell
        return CosetSet(
            self.universe, frozenset((c * z) % ell for z in self.members)
        )

    def opposite(self) -> "CosetSet":
        ell = self.universe.ell
        return CosetSet(
            self.universe, frozenset((ell - z) % ell for z in self.members)
        )

    def complement(self) -> "CosetSet":
        return CosetSet(
            self.universe,
            frozenset(range(self.universe.ell)) - self.members,
        )

    def dual(self) -> "CosetSet":
        """Complement of the opposite set."""
        return self.opposite().complement()

    def mod_u_image(self, u: int) -> frozenset[int]:
        return frozenset(z % u for z in self.members)

    def star_dual(self, u: int, omega: int) -> "CosetSet":
        """Elements of the dual set congruent to -omega mod u."""
        target = (-omega) % u
        return CosetSet(
            self.universe,
            frozenset(z for z in self.dual().members if z % u == target),
        )

    def __repr__(self):
        return f"CosetSet(ell={self.universe.ell}, {self.sorted()})"


def coset(universe: CosetUniverse, z: int) -> CosetSet:
    """The q-cyclotomic coset containing z."""
    return universe.subset([z]).closure()


@lru_cache(maxsize=None)
def _cosets_cached(ell, q):
    universe = CosetUniverse(ell, q)
    seen: set[int] = set()
    out = []
    for z in range(ell):
        if z in seen:
            continue
        c = coset(universe, z)
        seen |= c.members
        out.append(c)
    return tuple(out)


def cosets(universe: CosetUniverse) -> tuple[CosetSet, ...]:
    """All q-cyclotomic cosets, ordered by minimum element."""
    return _cosets_cached(universe.ell, universe.q)


def representatives(universe: CosetUniverse) -> list[int]:
    """The minimum element of each coset, sorted ascending."""
    return sorted(min(c.members) for c in cosets(universe))


def count_classes(universe: CosetUniverse) -> int:
    """Number of q-cyclotomic cosets, by actual partitioning."""
    return len(cosets(universe))


def class_count_formula(universe: CosetUniverse) -> int:
    """Divisor-sum cross-check: sum over d | ell of phi(d)/ord_d(q)."""
    total = 0
    for d in divisors(universe.ell):
        total += euler_phi(d) // multiplicative_order(universe.q, d)
    return total


class CyclotomicPartition:
    """An (s+1)-tuple of disjoint q-closed sets covering Sigma_ell."""

    def __init__(self, universe: CosetUniverse, blocks):
        blocks = tuple(blocks)
        if len(blocks) < 2:
            raise SpecError("a partition needs at least two blocks (s >= 1)")
        covered: set[int] = set()
        for b in blocks:
            if b.universe != universe:
                raise SpecError("partition blocks must share the universe")
            if covered & b.members:
                raise SpecError("partition blocks overlap")
            if not b.is_q_closed():
                raise SpecError("partition blocks must be q-closed")
            covered |= b.members
        if covered != set(range(universe.ell)):
            raise SpecError("partition blocks must cover Sigma_ell")
        self.universe = universe
        self.blocks = blocks
        self.s = len(blocks) - 1

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicPartition)
            and self.universe == other.universe
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.universe, self.blocks))

    def __repr__(self):
        return f"CyclotomicPartition({[b.sorted() for b in self.blocks]})"

    def level_of(self, z: int) -> int:
        for t, b in enumerate(self.blocks):
            if z in b:
                return t
        raise AssertionError("partition covers Sigma_ell; unreachable")

    def tilde_dual(self) -> "CyclotomicPartition":
        """Blocks reversed and negated; an involution."""
        return CyclotomicPartition(
            self.universe, [b.opposite() for b in reversed(self.blocks)]
        )

    def star_dual(self, u: int, omega: int | None = None) -> "CyclotomicPartition":
        """The partition of the dual code of a contractible code.

        Requires every nonempty information block (levels < s) to sit in a
        single residue class omega mod u.  With all information blocks empty
        the map degenerates to the full-code partition.
        """
        info = frozenset().union(
            *(b.members for b in self.blocks[: self.s])
        )
        if not info:
            # Zero code: its dual is everything.
            full = self.universe.full()
            empty = self.universe.empty()
            return CyclotomicPartition(
                self.universe, [full] + [empty] * self.s
            )
        residues = {z % u for z in info}
        if len(residues) > 1:
            raise SingletonViolation(
                f"information blocks meet several residue classes mod {u}: "
                f"{sorted(residues)}"
            )
        derived = residues.pop()
        if omega is None:
            omega = derived
        elif omega % u != derived:
            raise SingletonViolation(
                f"stated omega {omega} does not match derived {derived}"
            )
        a_s = self.blocks[self.s]
        target = (-omega) % u
        a_s_star = CosetSet(
            self.universe,
            frozenset(z for z in a_s.members if z % u == target),
        )
        a_0_tri = self.blocks[0].union(a_s.difference(a_s_star))
        new_blocks = [a_s_star.opposite()]
        for t in range(self.s - 1, 0, -1):
            new_blocks.append(self.blocks[t].opposite())
        new_blocks.append(a_0_tri.opposite())
        return CyclotomicPartition(self.universe, new_blocks)

    def to_assignment(self) -> dict[int, int]:
        return {z: self.level_of(z) for z in representatives(self.universe)}

    def to_json(self) -> dict[str, int]:
        return {str(z): t for z, t in sorted(self.to_assignment().items())}

    @staticmethod
    def from_json(universe: CosetUniverse, s: int, doc) -> "CyclotomicPartition":
        if isinstance(doc, str):
            doc = json.loads(doc)
        assignment = {int(k): int(v) for k, v in doc.items()}
        return make_partition(universe, s, assignment)


def make_partition(
    universe: CosetUniverse, s: int, assignment: dict[int, int]
) -> CyclotomicPartition:
    """Build the partition whose level-t block is the closure of the
    representatives assigned to t."""
    reps = representatives(universe)
    missing = set(reps) - set(assignment)
    if missing:
        raise SpecError(f"assignment misses representatives {sorted(missing)}")
    extra = set(assignment) - set(reps)
    if extra:
        raise SpecError(f"assignment keys {sorted(extra)} are not representatives")
    if any(v < 0 or v > s for v in assignment.values()):
        raise SpecError(f"levels must lie in 0..{s}")
    blocks = []
    for t in range(s + 1):
        chosen = [z for z in reps if assignment[z] == t]
        blocks.append(universe.subset(chosen).closure())
    return CyclotomicPartition(universe, blocks)


def partition_count(universe: CosetUniverse, s: int) -> int:
    """(s+1)^(number of cosets): how many (q, s)-cyclotomic partitions exist."""
    return (s + 1) ** count_classes(universe)

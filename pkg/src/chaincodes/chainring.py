"""Finite chain rings of invariants (q, s) with exact element arithmetic.

Two concrete families are provided, both realizing every pair (q, s):

* ``GR``:  Z_{p^s}[x]/(h(x)) with h a monic basic irreducible of degree r,
  so q = p^r and theta = p.
* ``EU``:  F_{p^r}[u]/(u^s), so q = p^r and theta = u.

Elements are immutable and interned per ring: equal coordinates mean the
same object.  Coordinates are lowest-degree-first integer coefficients in
the canonical polynomial basis; integers live in [0, p^s) for ``GR`` and in
[0, p^r) (residue-field encoding) per u-power for ``EU``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import _polys
from ._ints import is_prime
from .errors import SpecError
from .fields import FqArith

GALOIS_RING = "GR"
EU_POWER_SERIES = "EU"


@dataclass(frozen=True)
class ChainRingSpec:
    """Defining data of a concrete finite chain ring."""

    family: str
    p: int
    r: int
    s: int
    modulus: tuple[int, ...]  # monic degree-r polynomial over F_p, low first

    def validate(self) -> None:
        if self.family not in (GALOIS_RING, EU_POWER_SERIES):
            raise SpecError(f"unknown ring family {self.family!r}")
        if not is_prime(self.p):
            raise SpecError(f"p = {self.p} is not prime")
        if self.r < 1:
            raise SpecError("r must be >= 1")
        if self.s < 1:
            raise SpecError("s must be >= 1")
        mod = [c % self.p for c in self.modulus]
        if len(mod) != self.r + 1 or mod[-1] != 1:
            raise SpecError("modulus must be monic of degree r")
        if not _polys.is_irreducible_fp(mod, self.p):
            raise SpecError("modulus is reducible over F_p")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "r": self.r,
            "s": self.s,
            "modulus": list(self.modulus),
        }

    @staticmethod
    def from_json(doc) -> "ChainRingSpec":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict):
            raise SpecError("ring spec must be a JSON object")
        try:
            family = doc["family"]
            p = int(doc["p"])
            r = int(doc["r"])
            s = int(doc["s"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed ring spec: {exc}") from exc
        if "modulus" in doc:
            modulus = tuple(int(c) for c in doc["modulus"])
        else:
            modulus = tuple(_polys.smallest_irreducible(p, r))
        spec = ChainRingSpec(family, p, r, s, modulus)
        spec.validate()
        return spec


class RingElement:
    """An element of a ChainRing in canonical coordinates."""

    __slots__ = ("ring", "coords", "_hash")

    def __init__(self, ring: "ChainRing", coords: tuple[int, ...]):
        self.ring = ring
        self.coords = coords
        self._hash = hash(coords)

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.coords == other.coords
            and self.ring is other.ring
        )

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        return self.ring._add(self, other)

    def __sub__(self, other):
        return self.ring._add(self, self.ring._neg(other))

    def __neg__(self):
        return self.ring._neg(self)

    def __mul__(self, other):
        return self.ring._mul(self, other)

    def __pow__(self, e: int):
        return self.ring.pow(self, e)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"<{list(self.coords)} in {self.ring.short_name()}>"

    def to_json(self) -> list[int]:
        return list(self.coords)


class ChainRing:
    """A concrete finite chain ring; construct via :func:`make_ring`."""

    def __init__(self, spec: ChainRingSpec):
        spec.validate()
        self.spec = spec
        self.family = spec.family
        self.p = spec.p
        self.r = spec.r
        self.s = spec.s
        self.q = spec.p**spec.r
        self.size = self.q**spec.s
        self.fq = FqArith(spec.p, spec.r, list(spec.modulus))
        self._pm = spec.p**spec.s  # coefficient modulus for the GR family
        if self.family == GALOIS_RING:
            if self.r == 1 or self.s == 1:
                self.lifted_modulus = [c % self._pm for c in spec.modulus]
            else:
                self.lifted_modulus = _polys.hensel_lift_modulus(
                    list(spec.modulus), self.p, self.s
                )
            width = self.r
        else:
            self.lifted_modulus = None
            width = self.s
        self._width = width
        self._cache: dict[tuple[int, ...], RingElement] = {}
        self.zero = self.make((0,) * width)
        if self.family == GALOIS_RING:
            self.one = self.make((1,) + (0,) * (width - 1))
            theta = (self.p % self._pm,) + (0,) * (width - 1)
        else:
            self.one = self.make((1,) + (0,) * (width - 1))
            if self.s == 1:
                theta = (0,) * width
            else:
                theta = (0, 1) + (0,) * (width - 2)
        self.theta = self.make(theta)
        self._teich = None
        self._elements = None

    # -- identity ---------------------------------------------------------

    @property
    def key(self):
        return (
            self.spec.family,
            self.spec.p,
            self.spec.r,
            self.spec.s,
            self.spec.modulus,
        )

    def __eq__(self, other):
        return isinstance(other, ChainRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def short_name(self) -> str:
        return f"{self.family}(p={self.p},r={self.r},s={self.s})"

    def __repr__(self):
        return f"ChainRing[{self.short_name()}, q={self.q}, |R|={self.size}]"

    # -- element construction --------------------------------------------

    def make(self, coords: tuple[int, ...]) -> RingElement:
        elem = self._cache.get(coords)
        if elem is None:
            elem = RingElement(self, coords)
            self._cache[coords] = elem
        return elem

    def element(self, coords) -> RingElement:
        """Validating public constructor from a coordinate sequence."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self._width:
            raise SpecError(
                f"expected {self._width} coordinates, got {len(coords)}"
            )
        bound = self._pm if self.family == GALOIS_RING else self.q
        coords = tuple(c % bound for c in coords)
        return self.make(coords)

    def from_int(self, k: int) -> RingElement:
        """The image of the integer k under Z -> R."""
        return self.int_mul(k, self.one)

    def element_at(self, index: int) -> RingElement:
        base = self._pm if self.family == GALOIS_RING else self.q
        coords = []
        for _ in range(self._width):
            coords.append(index % base)
            index //= base
        return self.make(tuple(coords))

    def elements(self):
        """All ring elements in the deterministic canonical order."""
        if self._elements is None:
            self._elements = tuple(
                self.element_at(i) for i in range(self.size)
            )
        return self._elements

    # -- arithmetic -------------------------------------------------------

    def _add(self, a: RingElement, b: RingElement) -> RingElement:
        if self.family == GALOIS_RING:
            n = self._pm
            return self.make(
                tuple((x + y) % n for x, y in zip(a.coords, b.coords))
            )
        fq = self.fq
        return self.make(
            tuple(fq.add(x, y) for x, y in zip(a.coords, b.coords))
        )

    def _neg(self, a: RingElement) -> RingElement:
        if self.family == GALOIS_RING:
            n = self._pm
            return self.make(tuple((-x) % n for x in a.coords))
        fq = self.fq
        return self.make(tuple(fq.neg(x) for x in a.coords))

    def _mul(self, a: RingElement, b: RingElement) -> RingElement:
        if self.family == GALOIS_RING:
            prod = _polys.mul(list(a.coords), list(b.coords), self._pm)
            if len(prod) > self.r:
                prod = _polys.mod_unit_lead(prod, self.lifted_modulus, self._pm)
            prod = prod + [0] * (self.r - len(prod))
            return self.make(tuple(prod))
        fq = self.fq
        s = self.s
        out = [0] * s
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j in range(s - i):
                y = b.coords[j]
                if y:
                    out[i + j] = fq.add(out[i + j], fq.mul(x, y))
        return self.make(tuple(out))

    def int_mul(self, k: int, a: RingElement) -> RingElement:
        if self.family == GALOIS_RING:
            n = self._pm
            return self.make(tuple((k * x) % n for x in a.coords))
        fq = self.fq
        kf = k % self.p  # integers act through the prime subfield
        scal = kf  # constant field element
        return self.make(tuple(fq.mul(scal, x) for x in a.coords))

    def pow(self, a: RingElement, e: int) -> RingElement:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            e >>= 1
        return out

    # -- residue field ----------------------------------------------------

    def residue(self, a: RingElement) -> int:
        """The canonical projection onto F_q, as the field-integer encoding."""
        if self.family == GALOIS_RING:
            p = self.p
            out = 0
            mult = 1
            for c in a.coords:
                out += (c % p) * mult
                mult *= p
            return out
        return a.coords[0]

    def lift(self, c: int) -> RingElement:
        """The naive coordinatewise lift of a residue-field element."""
        c %= self.q
        if self.family == GALOIS_RING:
            coords = []
            for _ in range(self.r):
                coords.append(c % self.p)
                c //= self.p
            return self.make(tuple(coords))
        return self.make((c,) + (0,) * (self.s - 1))

    @lru_cache(maxsize=None)
    def _residue_ring_cached(self):
        return make_ring(
            ChainRingSpec(EU_POWER_SERIES, self.p, self.r, 1, self.spec.modulus)
        )

    def residue_ring(self) -> "ChainRing":
        """F_q presented as the chain ring F_{p^r}[u]/(u)."""
        return self._residue_ring_cached()

    def residue_element(self, a: RingElement) -> RingElement:
        return self.residue_ring().make((self.residue(a),))

    # -- theta-adic structure --------------------------------------------

    def theta_pow(self, t: int) -> RingElement:
        if t >= self.s:
            return self.zero
        out = self.one
        for _ in range(t):
            out = self._mul(out, self.theta)
        return out

    def theta_valuation(self, a: RingElement) -> int:
        """Largest t <= s with a in R theta^t (s for the zero element)."""
        if self.family == EU_POWER_SERIES:
            for i, c in enumerate(a.coords):
                if c:
                    return i
            return self.s
        best = self.s
        for c in a.coords:
            if c == 0:
                continue
            v = 0
            while c % self.p == 0:
                c //= self.p
                v += 1
            best = min(best, v)
        return best

    def theta_shift_down(self, a: RingElement, t: int = 1) -> RingElement:
        """The canonical preimage under multiplication by theta^t: requires
        valuation >= t; the result's top t theta-digits are zero."""
        if t == 0:
            return a
        if self.theta_valuation(a) < t:
            raise SpecError("element is not divisible by theta^t")
        if self.family == GALOIS_RING:
            d = self.p**t
            return self.make(tuple(c // d for c in a.coords))
        return self.make(a.coords[t:] + (0,) * t)

    def teichmuller(self, a: RingElement) -> RingElement:
        """The Teichmuller representative with the same residue as a."""
        b = a
        while True:
            c = self.pow(b, self.q)
            if c is b or c == b:
                return b
            b = c

    def teichmuller_set(self) -> tuple[RingElement, ...]:
        """The q solutions of b^q = b, ordered by residue 0..q-1."""
        if self._teich is None:
            self._teich = tuple(
                self.teichmuller(self.lift(c)) for c in range(self.q)
            )
        return self._teich

    def teichmuller_of_residue(self, c: int) -> RingElement:
        return self.teichmuller_set()[c % self.q]

    def theta_adic_expansion(self, a: RingElement) -> tuple[RingElement, ...]:
        """The unique digits (a_0, ..., a_{s-1}) in the Teichmuller set with
        a = sum a_t theta^t."""
        digits = []
        cur = a
        for _ in range(self.s):
            d = self.teichmuller(cur)
            digits.append(d)
            cur = self.theta_shift_down(cur - d)
        return tuple(digits)

    def recompose(self, digits) -> RingElement:
        out = self.zero
        for t, d in enumerate(digits):
            out = out + self._mul(d, self.theta_pow(t))
        return out

    # -- units ------------------------------------------------------------

    def is_unit(self, a: RingElement) -> bool:
        return self.residue(a) != 0

    def inv(self, a: RingElement) -> RingElement:
        if not self.is_unit(a):
            raise ZeroDivisionError("element is not a unit")
        b = self.lift(self.fq.inv(self.residue(a)))
        two = self.from_int(2)
        for _ in range(self.s):  # Newton: precision doubles per step
            b = self._mul(b, two - self._mul(a, b))
        return b

    def unit_group_order(self) -> int:
        return self.q ** (self.s - 1) * (self.q - 1)

    def multiplicative_order(self, a: RingElement) -> int:
        if not self.is_unit(a):
            raise ValueError("nonunits have no multiplicative order")
        out = 1
        cur = a
        while cur != self.one:
            cur = self._mul(cur, a)
            out += 1
            if out > self.unit_group_order():
                raise AssertionError("order search overran the unit group")
        return out


@lru_cache(maxsize=None)
def _ring_for_key(key) -> ChainRing:
    family, p, r, s, modulus = key
    return ChainRing(ChainRingSpec(family, p, r, s, modulus))


def make_ring(spec: ChainRingSpec | dict | str) -> ChainRing:
    """Construct (or fetch the cached copy of) the ring for a spec."""
    if not isinstance(spec, ChainRingSpec):
        spec = ChainRingSpec.from_json(spec)
    spec.validate()
    return _ring_for_key((spec.family, spec.p, spec.r, spec.s, spec.modulus))


def ring_spec(family: str, p: int, r: int, s: int, modulus=None) -> ChainRingSpec:
    """Convenience builder deriving the canonical modulus when omitted."""
    if modulus is None:
        modulus = _polys.smallest_irreducible(p, r)
    return ChainRingSpec(family, p, r, s, tuple(modulus))


def galois_ring(p: int, r: int, s: int) -> ChainRing:
    return make_ring(ring_spec(GALOIS_RING, p, r, s))


def eu_ring(p: int, r: int, s: int) -> ChainRing:
    return make_ring(ring_spec(EU_POWER_SERIES, p, r, s))

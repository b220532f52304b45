"""Linear codes over a finite chain ring, held as generator matrices.

A code caches its standard-form matrix at construction: rows with pivots
theta^t placed by valuation-greedy elimination, giving the type
(k_0, ..., k_{s-1}), the rank, and the cardinality q^(sum (s-t) k_t).
"""

from __future__ import annotations

from itertools import product

from .chainring import ChainRing, RingElement
from .errors import BudgetExceeded, SpecError

DEFAULT_CODEWORD_BUDGET = 1 << 24


# -- vector helpers --------------------------------------------------------


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def vdot(u, v):
    ring = u[0].ring
    out = ring.zero
    for a, b in zip(u, v):
        out = out + a * b
    return out


def weight(v) -> int:
    return sum(1 for a in v if a)


def zero_vector(ring: ChainRing, n: int):
    return (ring.zero,) * n


def constashift(v, gamma: RingElement):
    """tau_gamma: wrap the last coordinate scaled by the unit gamma."""
    ring = gamma.ring
    if not ring.is_unit(gamma):
        raise SpecError("constashift requires a unit multiplier")
    return (gamma * v[-1],) + tuple(v[:-1])


class LinearCode:
    """An R-submodule of R^length, spanned by the given generator rows."""

    def __init__(self, ring: ChainRing, length: int, rows=()):
        if length < 1:
            raise SpecError("code length must be >= 1")
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != length:
                raise SpecError("generator row length mismatch")
            for a in r:
                if not isinstance(a, RingElement) or a.ring is not ring:
                    raise SpecError("generator entries must belong to the ring")
        self.ring = ring
        self.length = length
        self.generators = tuple(rows)
        self._reduce()

    def _reduce(self):
        ring = self.ring
        s = ring.s
        rows = [list(r) for r in self.generators if any(r)]
        pivots: list[tuple[int, int]] = []  # (column, theta-valuation)
        done = 0
        while True:
            best = None  # (val, col, row)
            for j in range(done, len(rows)):
                for c, a in enumerate(rows[j]):
                    if not a:
                        continue
                    v = ring.theta_valuation(a)
                    if best is None or (v, c, j) < best:
                        best = (v, c, j)
                if best is not None and best[0] == 0 and best[1] <= min(
                    (c for c, _ in pivots), default=self.length
                ):
                    pass  # cheap early exit is not worth extra bookkeeping
            if best is None:
                break
            val, col, j = best
            rows[done], rows[j] = rows[j], rows[done]
            row = rows[done]
            unit = ring.theta_shift_down(row[col], val)
            scale = ring.inv(unit)
            rows[done] = row = [scale * a for a in row]
            for k, other in enumerate(rows):
                if k == done:
                    continue
                b = other[col]
                if not b:
                    continue
                digits = ring.theta_adic_expansion(b)
                if k > done:
                    if ring.theta_valuation(b) < val:
                        raise AssertionError("valuation-greedy pivot violated")
                    coeff = ring.recompose(
                        (ring.zero,) * 0 + digits[val:] + (ring.zero,) * val
                    )
                else:
                    # Reduce entries above the pivot modulo theta^val.
                    coeff = ring.recompose(
                        digits[val:] + (ring.zero,) * val
                    )
                if coeff:
                    rows[k] = [a - coeff * b2 for a, b2 in zip(other, row)]
            pivots.append((col, val))
            done += 1
        self.sf_rows = tuple(tuple(r) for r in rows[:done])
        self.pivots = tuple(pivots)
        kt = [0] * s
        for _, v in pivots:
            kt[v] += 1
        self.type = tuple(kt)
        self.rank = len(pivots)
        self.cardinality = ring.q ** sum(
            (s - t) * k for t, k in enumerate(kt)
        )

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.rank == 0

    def __contains__(self, v) -> bool:
        ring = self.ring
        v = list(v)
        if len(v) != self.length:
            raise SpecError("vector length mismatch")
        for row, (col, val) in zip(self.sf_rows, self.pivots):
            a = v[col]
            if not a:
                continue
            if ring.theta_valuation(a) < val:
                return False
            digits = ring.theta_adic_expansion(a)
            coeff = ring.recompose(digits[val:] + (ring.zero,) * val)
            if coeff:
                v = [x - coeff * y for x, y in zip(v, row)]
        return not any(v)

    def _coeff_choices(self, val: int):
        ring = self.ring
        free = ring.s - val
        teich = ring.teichmuller_set()
        out = []
        for digits in product(teich, repeat=free):
            out.append(ring.recompose(digits + (ring.zero,) * val))
        return out

    def codewords(self, max_codewords: int | None = DEFAULT_CODEWORD_BUDGET):
        """Stream every codeword exactly once (cardinality many)."""
        if max_codewords is not None and self.cardinality > max_codewords:
            raise BudgetExceeded(
                f"|C| = {self.cardinality} exceeds budget {max_codewords}"
            )
        ring = self.ring
        choices = [self._coeff_choices(val) for _, val in self.pivots]
        zero = zero_vector(ring, self.length)

        def rec(i, partial):
            if i == len(self.sf_rows):
                yield partial
                return
            row = self.sf_rows[i]
            for c in choices[i]:
                if c:
                    yield from rec(i + 1, vadd(partial, vscale(c, row)))
                else:
                    yield from rec(i + 1, partial)

        yield from rec(0, zero)

    def min_weight(self, max_codewords: int | None = DEFAULT_CODEWORD_BUDGET):
        """Exact minimum Hamming weight by codeword enumeration."""
        if self.is_zero():
            raise SpecError("the zero code has no minimum weight")
        best = self.length + 1
        for w in self.codewords(max_codewords):
            if any(w):
                wt = weight(w)
                if wt < best:
                    best = wt
                    if best == 1:
                        break
        return best

    # -- duality -----------------------------------------------------------

    def dual(self) -> "LinearCode":
        """The annihilator code, via diagonalization G = P D Q."""
        ring = self.ring
        n = self.length
        mat = [list(r) for r in self.sf_rows]
        k = len(mat)
        qmat = [
            [ring.one if i == j else ring.zero for j in range(n)]
            for i in range(n)
        ]  # accumulated column operations
        diag: list[int] = []
        i = 0
        while i < k:
            best = None
            for rr in range(i, k):
                for cc in range(i, n):
                    a = mat[rr][cc]
                    if not a:
                        continue
                    v = ring.theta_valuation(a)
                    if best is None or (v, rr, cc) < best:
                        best = (v, rr, cc)
            if best is None:
                break
            val, rr, cc = best
            mat[i], mat[rr] = mat[rr], mat[i]
            _swap_cols(mat, qmat, i, cc)
            scale = ring.inv(ring.theta_shift_down(mat[i][i], val))
            mat[i] = [scale * a for a in mat[i]]
            for r2 in range(k):
                if r2 == i or not mat[r2][i]:
                    continue
                coeff = ring.theta_shift_down(mat[r2][i], val)
                mat[r2] = [a - coeff * b for a, b in zip(mat[r2], mat[i])]
            for c2 in range(n):
                if c2 == i or not mat[i][c2]:
                    continue
                coeff = ring.theta_shift_down(mat[i][c2], val)
                _add_col(mat, qmat, c2, i, -coeff)
            diag.append(val)
            i += 1
        gens = []
        for j in range(n):
            col = tuple(qmat[rr][j] for rr in range(n))
            if j < len(diag):
                t = diag[j]
                if t == 0:
                    continue
                gens.append(vscale(ring.theta_pow(ring.s - t), col))
            else:
                gens.append(col)
        return LinearCode(ring, n, gens)

    # -- comparisons and algebra ------------------------------------------

    def same_code(self, other: "LinearCode") -> bool:
        if self.ring != other.ring or self.length != other.length:
            return False
        if self.cardinality != other.cardinality:
            return False
        return all(r in other for r in self.sf_rows)

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.same_code(other)

    __hash__ = None

    def key(self):
        """Deterministic comparison key (standard-form coordinates)."""
        return (
            self.cardinality,
            tuple(tuple(a.coords for a in r) for r in self.sf_rows),
        )

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec.to_json(),
            "length": self.length,
            "generators": [
                [a.to_json() for a in row] for row in self.sf_rows
            ],
        }


def zero_code(ring: ChainRing, n: int) -> LinearCode:
    return LinearCode(ring, n, ())


def full_code(ring: ChainRing, n: int) -> LinearCode:
    rows = []
    for i in range(n):
        row = [ring.zero] * n
        row[i] = ring.one
        rows.append(row)
    return LinearCode(ring, n, rows)


def _swap_cols(mat, qmat, i, j):
    if i == j:
        return
    for row in mat:
        row[i], row[j] = row[j], row[i]
    for row in qmat:
        row[i], row[j] = row[j], row[i]


def _add_col(mat, qmat, dst, src, coeff):
    for row in mat:
        row[dst] = row[dst] + coeff * row[src]
    for row in qmat:
        row[dst] = row[dst] + coeff * row[src]


def _check_compatible(c1: LinearCode, c2: LinearCode):
    if c1.ring != c2.ring or c1.length != c2.length:
        raise SpecError("codes must share ring and length")


def sum_codes(c1: LinearCode, c2: LinearCode) -> LinearCode:
    _check_compatible(c1, c2)
    return LinearCode(c1.ring, c1.length, c1.sf_rows + c2.sf_rows)


def intersect_codes(c1: LinearCode, c2: LinearCode) -> LinearCode:
    _check_compatible(c1, c2)
    return sum_codes(c1.dual(), c2.dual()).dual()


def membership(code: LinearCode, v) -> bool:
    return tuple(v) in code


def is_constacyclic(code: LinearCode, gamma: RingElement) -> bool:
    """tau_gamma-invariance, checked on generators (sufficient by linearity)."""
    if gamma.ring is not code.ring:
        raise SpecError("gamma must belong to the code's ring")
    return all(constashift(g, gamma) in code for g in code.sf_rows)


def residue_code(code: LinearCode) -> LinearCode:
    """The componentwise projection to F_q, as a code over the residue ring."""
    ring = code.ring
    res = ring.residue_ring()
    rows = [
        tuple(ring.residue_element(a) for a in row) for row in code.sf_rows
    ]
    return LinearCode(res, code.length, rows)


# -- Galois operations on codes over an extension S|R ----------------------


def extend_code(ext, code: LinearCode) -> LinearCode:
    """The S-span of an R-linear code's generators."""
    if code.ring != ext.base:
        raise SpecError("extend_code expects a code over the base ring")
    rows = [tuple(ext.embed(a) for a in row) for row in code.sf_rows]
    return LinearCode(ext.top, code.length, rows)


def sigma_image(ext, code: LinearCode, power: int = 1) -> LinearCode:
    if code.ring != ext.top:
        raise SpecError("sigma_image expects a code over the extension")
    rows = [
        tuple(ext.frobenius(a, power) for a in row) for row in code.sf_rows
    ]
    return LinearCode(ext.top, code.length, rows)


def closure_code(ext, code: LinearCode) -> LinearCode:
    """The smallest sigma-invariant code containing the input: sum of the
    sigma-orbit."""
    rows = []
    for i in range(ext.m):
        rows.extend(sigma_image(ext, code, i).sf_rows)
    return LinearCode(ext.top, code.length, rows)


def trace_code(ext, code: LinearCode) -> LinearCode:
    """Componentwise trace image, as an R-linear code.

    R-module generators: traces of xi^k * g for generators g and k < m.
    """
    if code.ring != ext.top:
        raise SpecError("trace_code expects a code over the extension")
    rows = []
    for g in code.sf_rows:
        for k in range(ext.m):
            xk = ext.xi_pow(k)
            rows.append(tuple(ext.trace(xk * a) for a in g))
    return LinearCode(ext.base, code.length, rows)


def res_subring_code(ext, code: LinearCode) -> LinearCode:
    """The subring subcode B intersect R^length, computed structurally.

    Flatten S^length to R^(m*length) through the xi-power basis; intersect
    the flattened module with the sublattice carried by the 0th basis
    coordinate of every component, then read the result back over R.
    """
    if code.ring != ext.top:
        raise SpecError("res_subring expects a code over the extension")
    base, m, n = ext.base, ext.m, code.length
    flat_rows = []
    for g in code.sf_rows:
        for k in range(m):
            xk = ext.xi_pow(k)
            row = []
            for a in g:
                row.extend(ext.xi_coordinates(xk * a))
            flat_rows.append(tuple(row))
    flat = LinearCode(base, m * n, flat_rows)
    lattice_perp_rows = []
    for i in range(n):
        for j in range(1, m):
            row = [base.zero] * (m * n)
            row[i * m + j] = base.one
            lattice_perp_rows.append(tuple(row))
    inter = sum_codes(
        flat.dual(), LinearCode(base, m * n, lattice_perp_rows)
    ).dual()
    rows = []
    for g in inter.sf_rows:
        for i in range(n):
            for j in range(1, m):
                if g[i * m + j]:
                    raise AssertionError(
                        "intersection left the coordinate sublattice"
                    )
        rows.append(tuple(g[i * m] for i in range(n)))
    return LinearCode(base, n, rows)

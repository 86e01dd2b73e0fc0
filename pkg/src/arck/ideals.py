"""Ideal arithmetic over a presented ring R = k[x1..xr]/Q.

Every operation lifts generators to the ambient polynomial ring, adjoins the
quotient generators, and works with cached reduced Groebner bases there.
Intersections use the single-tag method (eliminate t from t*I + (1-t)*J + Q);
colons divide tag intersections by the colon element, which is exact in the
ambient domain.  A degree-truncated linear-algebra membership oracle provides
an independent cross-check for homogeneous data.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .errors import ContractError, ResourceLimitError, StructureError
from .groebner import GroebnerBasis, buchberger, eliminate
from .orders import elimination_order
from .poly import Polynomial, RingPresentation, mono_mul

SATURATION_CAP = 64


class Ideal:
    """A finitely generated ideal of a presented ring.

    The canonical form is the reduced Groebner basis of lift(generators) + Q
    in the ambient ring; equality of ideals is equality of canonical forms,
    membership is a zero normal form.
    """

    __slots__ = ("ring", "generators", "_gb", "_powers")

    def __init__(self, ring: RingPresentation, generators=()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise StructureError(f"generator {g} is not in {ring!r}")
            if g.is_zero:
                continue
            fs = frozenset(g._terms.items())
            if fs not in seen:
                seen.add(fs)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None
        self._powers = None

    # -- canonical form ---------------------------------------------------------

    def ambient_generators(self):
        """Lifted generators plus the quotient generators, in the ambient ring."""
        return [g.lift() for g in self.generators] + list(self.ring.quotient)

    def groebner(self) -> GroebnerBasis:
        """Cached reduced basis of the lifted ideal (ambient ring)."""
        if self._gb is None:
            self._gb = buchberger(self.ambient_generators(),
                                  ring=self.ring.ambient)
        return self._gb

    def canonical_generators(self):
        """Canonical generator list: reduced basis elements with nonzero image."""
        qgb = self.ring.quotient_basis() if self.ring.is_quotient else None
        out = []
        for p in self.groebner():
            if qgb is not None:
                p = qgb.normal_form(p)
                if p.is_zero:
                    continue
            out.append(p.retag(self.ring))
        return out

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise StructureError("membership across different rings")
        return self.groebner().contains(f.lift())

    def contains_ideal(self, other: "Ideal") -> bool:
        self._same_ring(other)
        gb = self.groebner()
        return all(gb.contains(g.lift()) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        self._same_ring(other)
        return self.groebner() == other.groebner()

    @property
    def is_zero(self) -> bool:
        return len(self.groebner()) == 0 or all(
            self.ring.quotient_basis().contains(g) for g in self.groebner())

    @property
    def is_unit(self) -> bool:
        return self.groebner().is_unit_ideal()

    def _same_ring(self, other: "Ideal"):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise StructureError("ideal operation across different rings")

    # -- constructors -----------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        gens = [a * b for a in self.generators for b in other.generators]
        return Ideal(self.ring, gens)

    def power(self, n: int) -> "Ideal":
        """I^n, computed from the cached (n-1)-st power's generator list."""
        if n < 0:
            raise StructureError("negative ideal power")
        if n == 0:
            return Ideal(self.ring, [self.ring.one()])
        if self._powers is None:
            self._powers = {1: self}
        if n not in self._powers:
            top = max(k for k in self._powers if k <= n)
            acc = self._powers[top]
            for k in range(top + 1, n + 1):
                acc = acc * self
                self._powers[k] = acc
        return self._powers[n]

    def __pow__(self, n: int) -> "Ideal":
        return self.power(n)

    # -- intersection, colon, saturation ------------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J by eliminating a fresh tag t from t*I + (1-t)*J + Q."""
        self._same_ring(other)
        lifted = _tag_intersect(
            self.ring.ambient,
            [g.lift() for g in self.generators],
            [g.lift() for g in other.generators],
            extra=list(self.ring.quotient))
        return Ideal(self.ring, _mod_quotient(self.ring, lifted))

    def colon(self, other) -> "Ideal":
        """(I : f) for a polynomial, (I : J) for an ideal."""
        if isinstance(other, Ideal):
            self._same_ring(other)
            if not other.generators:
                return Ideal(self.ring, [self.ring.one()])
            result = self.colon(other.generators[0])
            for g in other.generators[1:]:
                result = result.intersect(self.colon(g))
            return result
        f = other
        if not isinstance(f, Polynomial):
            f = self.ring.const(f)
        if f.ring != self.ring:
            raise StructureError("colon element from a different ring")
        flift = self.ring.reduce(f).lift()
        if flift.is_zero:
            raise ZeroDivisionError("colon by an element that is zero in the ring")
        inter = _tag_intersect(self.ring.ambient, self.ambient_generators(),
                               [flift])
        gens = [p.exact_div(flift) for p in inter]
        return Ideal(self.ring, _mod_quotient(self.ring, gens))

    def saturate(self, other: "Ideal") -> "Ideal":
        """(I : J^∞): iterate colon until the chain stabilizes."""
        self._same_ring(other)
        current = self
        for _ in range(SATURATION_CAP):
            step = current.colon(other)
            if step.equals(current):
                return current
            current = step
        raise ResourceLimitError(
            f"saturation did not stabilize within {SATURATION_CAP} steps")

    # -- graded data ----------------------------------------------------------------

    def require_homogeneous(self):
        for g in itertools.chain(self.generators, self.ring.quotient):
            if not g.is_homogeneous():
                raise ContractError(
                    f"generator {g} is not homogeneous for weights "
                    f"{self.ring.weights}")

    def std_monomials(self, d: int):
        """Weighted-degree-d monomials outside the leading-term ideal."""
        self.require_homogeneous()
        cands = monomials_of_weighted_degree(self.ring, d)
        if not cands:
            return []
        gb = self.groebner()
        lms = gb.leading_monomials()
        if not lms:
            return list(cands)
        mask = _kernels.divisible_any(
            np.array(cands, dtype=np.int64),
            np.array(lms, dtype=np.int64))
        return [m for m, hit in zip(cands, mask) if not hit]

    def graded_dim(self, d: int) -> int:
        """dim_k of the weighted-degree-d piece of R/I (I homogeneous)."""
        return len(self.std_monomials(d))

    def colength(self, max_level: int = 4096) -> int:
        """Total count of standard monomials; requires a finite quotient."""
        gb = self.groebner()
        lms = gb.leading_monomials()
        if not lms:
            raise ResourceLimitError("colength of the zero ideal is infinite")
        lm_arr = np.array(lms, dtype=np.int64)
        total = 0
        for level in range(max_level + 1):
            cands = _monomials_of_plain_degree(self.ring.nvars, level)
            mask = _kernels.divisible_any(
                np.array(cands, dtype=np.int64), lm_arr)
            alive = int(len(cands) - mask.sum())
            if alive == 0:
                return total
            total += alive
        raise ResourceLimitError(
            f"quotient looks infinite-dimensional (no empty level up to "
            f"{max_level})")

    def contains_truncated(self, f: Polynomial, degree_bound: int) -> bool:
        """Membership by an exact linear solve on homogeneous data.

        Decides f ∈ I by solving f = Σ h_i g_i degree by degree over the
        coefficient field, independently of any Groebner machinery.  Requires
        homogeneous generators and a homogeneous f of weighted degree at most
        `degree_bound`.
        """
        if f.ring != self.ring:
            raise StructureError("membership across different rings")
        self.require_homogeneous()
        if not f.is_homogeneous():
            raise ContractError(f"{f} is not homogeneous")
        if f.is_zero:
            return True
        df = f.weighted_degree()
        if df > degree_bound:
            raise ContractError(
                f"degree {df} exceeds the stated bound {degree_bound}")
        ring = self.ring.ambient
        flift = f.lift()
        gens = [g.lift() for g in self.generators] + list(self.ring.quotient)
        rows = monomials_of_weighted_degree(ring, df)
        row_index = {m: i for i, m in enumerate(rows)}
        field = ring.field
        columns = []
        for g in gens:
            dg = g.weighted_degree()
            if dg > df:
                continue
            for shift in monomials_of_weighted_degree(ring, df - dg):
                col = {}
                for e, c in g._terms.items():
                    col[row_index[mono_mul(e, shift)]] = c
                columns.append(col)
        rhs = [flift.coeff_of(m) for m in rows]
        return _consistent(columns, rhs, len(rows), field)


def _consistent(columns, rhs, nrows, field) -> bool:
    """Exact Gaussian elimination: is rhs in the span of the columns?"""
    matrix = [[col.get(i, field.zero) for col in columns] + [rhs[i]]
              for i in range(nrows)]
    ncols = len(columns)
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        pivot = next((r for r in range(pivot_row, nrows) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        inv = field.invert(matrix[pivot_row][col])
        matrix[pivot_row] = [v * inv for v in matrix[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b
                             for a, b in zip(matrix[r], matrix[pivot_row])]
        pivot_row += 1
    # rows without pivots are all-zero in the coefficient part by construction
    return all(not matrix[r][ncols] for r in range(pivot_row, nrows))


def maximal_ideal(ring: RingPresentation) -> Ideal:
    """The graded maximal ideal m = (x1, ..., xr)."""
    return Ideal(ring, ring.gens())


def _fresh_name(base, taken):
    name = base
    while name in taken:
        name += "_"
    return name


def _tag_intersect(ambient: RingPresentation, gens1, gens2, extra=()):
    """Generators of (gens1 + extra) ∩ (gens2 + extra) in the ambient ring."""
    if not gens1 or not gens2:
        # one side is <extra> itself, which the other side contains
        return list(extra)
    tname = _fresh_name("#t", ambient.variables)
    ext = RingPresentation(ambient.field, (tname,) + ambient.variables,
                           (1,) + ambient.weights,
                           elimination_order(1, (1,) + ambient.weights))
    t = ext.var(tname)

    def up(p):
        return Polynomial(ext, {(0,) + e: c for e, c in p._terms.items()},
                          _clean=True)

    tagged = [t * up(g) for g in gens1]
    tagged += [(ext.one() - t) * up(g) for g in gens2]
    tagged += [up(q) for q in extra]
    gb = buchberger(tagged, ring=ext)
    elim = eliminate(gb, 1)
    return [p.retag(ambient) for p in elim]


def _mod_quotient(ring: RingPresentation, polys):
    """Reduce ambient polynomials mod Q, drop zero images, retag into the ring."""
    out = []
    for p in polys:
        q = ring.reduce(p.retag(ring.ambient))
        if not q.is_zero:
            out.append(q)
    return out


def monomials_of_weighted_degree(ring: RingPresentation, d: int):
    """All exponent tuples of exact weighted degree d (deterministic order)."""
    if d < 0:
        return []
    weights = ring.weights
    out = []

    def rec(i, rem, prefix):
        if i == len(weights) - 1:
            if rem % weights[i] == 0:
                out.append(prefix + (rem // weights[i],))
            return
        w = weights[i]
        for e in range(rem // w + 1):
            rec(i + 1, rem - e * w, prefix + (e,))

    rec(0, d, ())
    return out


def _monomials_of_plain_degree(nvars: int, d: int):
    out = []

    def rec(i, rem, prefix):
        if i == nvars - 1:
            out.append(prefix + (rem,))
            return
        for e in range(rem + 1):
            rec(i + 1, rem - e, prefix + (e,))

    rec(0, d, ())
    return out

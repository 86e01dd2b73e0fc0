"""Normal forms, S-polynomials, Buchberger's algorithm, block elimination.

The reduction loop keeps the working polynomial as a dict plus a max-heap of
candidate monomials (lazy deletion), and finds reducers through the int64
divisor-search kernel.  Intermediate basis elements are rescaled to primitive
integer form over QQ to keep coefficient growth in check.  A process-wide
total-degree cap aborts runaway computations with a resource error.
"""

from __future__ import annotations

import heapq

import numpy as np

from . import _kernels
from .errors import ContractError, ResourceLimitError, StructureError
from .poly import Polynomial, RingPresentation, mono_div, mono_lcm, mono_mul

DEFAULT_DEGREE_CAP = 64
_degree_cap = DEFAULT_DEGREE_CAP


def set_degree_cap(cap: int) -> int:
    """Set the global total-degree cap; returns the previous value."""
    global _degree_cap
    prev = _degree_cap
    _degree_cap = int(cap)
    return prev


def get_degree_cap() -> int:
    return _degree_cap


class _ReducerSet:
    """Preprocessed view of a basis: leading data plus an int64 LM matrix."""

    __slots__ = ("polys", "lms", "lcs", "tails", "lm_matrix")

    def __init__(self, polys, nvars):
        self.polys = list(polys)
        self.lms = [p.leading_monomial() for p in self.polys]
        self.lcs = [p.leading_coeff() for p in self.polys]
        self.tails = [p.terms()[1:] for p in self.polys]
        self.lm_matrix = np.array(self.lms, dtype=np.int64).reshape(
            len(self.polys), nvars)

    def find(self, mono) -> int:
        return int(_kernels.find_divisor(
            self.lm_matrix, np.array(mono, dtype=np.int64)))


def _reduce_terms(terms, red: _ReducerSet, order):
    """Full normal form of a term dict against a reducer set."""
    p = dict(terms)
    out = {}
    key = order.key

    def negkey(m):
        return tuple(-c for c in key(m))

    heap = [(negkey(m), m) for m in p]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        i = red.find(m)
        if i < 0:
            out[m] = c
            continue
        shift = mono_div(m, red.lms[i])
        factor = c / red.lcs[i]
        for mg, cg in red.tails[i]:
            m2 = mono_mul(mg, shift)
            prev = p.get(m2)
            if prev is None:
                p[m2] = -(factor * cg)
                heapq.heappush(heap, (negkey(m2), m2))
            else:
                nc = prev - factor * cg
                if nc:
                    p[m2] = nc
                else:
                    del p[m2]
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic, minimal, mutually irreducible.

    For a fixed ring and order this is the canonical form of an ideal; two
    ideals are equal exactly when their reduced bases coincide.
    """

    __slots__ = ("ring", "polys", "_red")

    def __init__(self, ring: RingPresentation, polys, _trusted=False):
        if not _trusted:
            raise StructureError("construct Groebner bases via buchberger()")
        self.ring = ring
        self.polys = tuple(polys)
        self._red = None

    @property
    def order(self):
        return self.ring.order

    @property
    def basis(self):
        return self.polys

    def _reducers(self) -> _ReducerSet:
        if self._red is None:
            self._red = _ReducerSet(self.polys, self.ring.nvars)
        return self._red

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise StructureError("normal form requires matching ring and order")
        if not self.polys or f.is_zero:
            return f
        return Polynomial(self.ring,
                          _reduce_terms(f._terms, self._reducers(), self.order),
                          _clean=True)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0] == self.ring.one()

    def leading_monomials(self):
        return tuple(p.leading_monomial() for p in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and other.ring == self.ring
                and other.polys == self.polys)

    def __hash__(self):
        return hash((self.ring, self.polys))

    def __repr__(self):
        return "GB{" + ", ".join(str(p) for p in self.polys) + "}"


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f on division by a polynomial family (same ring/order).

    When `basis` is a Groebner basis the result is the canonical normal form:
    no term divisible by a leading monomial, idempotent and k-linear.
    """
    if isinstance(basis, GroebnerBasis):
        return basis.normal_form(f)
    polys = [g for g in basis if not g.is_zero]
    for g in polys:
        if g.ring != f.ring:
            raise StructureError("normal form requires matching ring and order")
    if not polys or f.is_zero:
        return f
    red = _ReducerSet(polys, f.ring.nvars)
    return Polynomial(f.ring, _reduce_terms(f._terms, red, f.ring.order),
                      _clean=True)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f,g) = (lcm/LT(f))f - (lcm/LT(g))g; the leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise StructureError("s_polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise StructureError("s_polynomial requires one ring")
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    return (f.mul_term(f.ring.field.invert(f.leading_coeff()), mono_div(lcm, lf))
            - g.mul_term(g.ring.field.invert(g.leading_coeff()), mono_div(lcm, lg)))


def _check_cap(p: Polynomial, cap: int):
    d = p.total_degree()
    if d != float("-inf") and d > cap:
        raise ResourceLimitError(
            f"total degree {d} exceeds the configured cap {cap}")


def buchberger(gens, ring: RingPresentation = None, deg_cap: int = None
               ) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pair selection follows the normal strategy (smallest lcm in the term
    order); the product and chain criteria prune useless pairs.  Output is
    deterministic for a fixed ring and order, and by reduced-basis uniqueness
    it is independent of the order of the input generators.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise StructureError("buchberger needs a ring for an empty input")
        ring = gens[0].ring
    cap = _degree_cap if deg_cap is None else deg_cap
    order = ring.order
    work = []
    seen = set()
    for g in gens:
        if g.ring != ring:
            raise StructureError("generators from mixed rings")
        if g.is_zero:
            continue
        g = g.primitive()
        fs = frozenset(g._terms.items())
        if fs not in seen:
            seen.add(fs)
            _check_cap(g, cap)
            work.append(g)
    work.sort(key=lambda p: order.key(p.leading_monomial()))
    if not work:
        return GroebnerBasis(ring, (), _trusted=True)

    basis = list(work)
    lms = [p.leading_monomial() for p in basis]
    pending = {}

    def enqueue(i, j):
        lcm = mono_lcm(lms[i], lms[j])
        pending[(i, j)] = (order.key(lcm), i, j)

    for j in range(len(basis)):
        for i in range(j):
            enqueue(i, j)

    red = None
    while pending:
        (i, j) = min(pending, key=pending.get)
        del pending[(i, j)]
        lcm = mono_lcm(lms[i], lms[j])
        if lcm == mono_mul(lms[i], lms[j]):
            continue  # product criterion: coprime leading monomials
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (mono_div(lcm, lms[k]) is not None
                    and (min(i, k), max(i, k)) not in pending
                    and (min(j, k), max(j, k)) not in pending):
                skip = True  # chain criterion
                break
        if skip:
            continue
        if red is None:
            red = _ReducerSet(basis, ring.nvars)
        s = s_polynomial(basis[i], basis[j])
        r = Polynomial(ring, _reduce_terms(s._terms, red, order), _clean=True)
        if r.is_zero:
            continue
        _check_cap(r, cap)
        r = r.primitive()
        basis.append(r)
        lms.append(r.leading_monomial())
        red = None
        new = len(basis) - 1
        for k in range(new):
            enqueue(k, new)

    return GroebnerBasis(ring, _reduce_basis(basis, ring), _trusted=True)


def _reduce_basis(basis, ring):
    """Minimalize and interreduce a Groebner basis; monic, canonically sorted."""
    order = ring.order
    basis = sorted(basis, key=lambda p: order.key(p.leading_monomial()))
    minimal = []
    for p in basis:
        lm = p.leading_monomial()
        if any(mono_div(lm, q.leading_monomial()) is not None for q in minimal):
            continue
        minimal.append(p)
    reduced = list(minimal)
    for i in range(len(reduced)):
        others = reduced[:i] + reduced[i + 1:]
        reduced[i] = normal_form(reduced[i], others).monic()
    reduced.sort(key=lambda p: order.key(p.leading_monomial()))
    return tuple(reduced)


def eliminate(gb: GroebnerBasis, k: int) -> GroebnerBasis:
    """Basis of the elimination ideal <gb> ∩ k[x_{k+1}..x_r].

    Requires a basis computed under an order with the elimination property for
    the first k variables (a block order or lex); the surviving elements form
    the reduced basis of the elimination ideal in the restricted ring.
    """
    if k == 0:
        return gb
    ring = gb.ring
    if k >= ring.nvars:
        raise StructureError("cannot eliminate every variable")
    if ring.order.nelim < k:
        raise ContractError(
            f"order {ring.order.kind} lacks the elimination property "
            f"for the first {k} variables")
    if ring.is_quotient:
        raise StructureError("eliminate operates on ambient presentations")
    small = RingPresentation(ring.field, ring.variables[k:], ring.weights[k:],
                             ring.order.restrict(k))
    kept = []
    for p in gb:
        if all(all(x == 0 for x in e[:k]) for e in p._terms):
            kept.append(Polynomial(
                small, {e[k:]: c for e, c in p._terms.items()}, _clean=True))
    kept.sort(key=lambda p: small.order.key(p.leading_monomial()))
    return GroebnerBasis(small, kept, _trusted=True)

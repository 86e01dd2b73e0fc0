"""Artin-Rees computations for ideal pairs (J, R).

Everything here is phrased for a pair of ideals I, J of a presented ring R:
instance checks of the strong identity I^n ∩ J = I^(n-h)(I^h ∩ J) and of the
weak containment I^n ∩ J ⊆ I^(n-h)J, exhaustive (n, h) tables with failure
witnesses, reduction-element search and Hilbert-Samuel multiplicity in
dimension one, the length of the finite local-cohomology piece of R/J, the
resulting a-priori uniform bound, Rees-algebra relation type, and two
built-in dimension-two families where no uniform number exists.

"Local at m" is approximated throughout by the graded setting: m is the
ideal of the variables, m-primariness means the saturation at m is the unit
ideal, and lengths are standard-monomial counts.  True local orders are out
of scope.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .coeff import QQ
from .errors import (BoundUnavailableError, ContractError, InternalError,
                     ResourceLimitError)
from .groebner import buchberger, eliminate
from .ideals import Ideal, maximal_ideal
from .orders import elimination_order
from .poly import Polynomial, RingPresentation

MULTIPLICITY_HORIZON = 24
ANNIHILATION_CAP = 64


# ---------------------------------------------------------------------------
# instance checks


def check_strong_ar(I: Ideal, J: Ideal, h: int, n: int):
    """Does I^n ∩ J = I^(n-h)(I^h ∩ J) hold?

    Returns (True, None) or (False, witness) where the witness is a canonical
    generator of I^n ∩ J outside the right-hand side.  The containment of the
    right side in the left always holds and is asserted on every call.
    """
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    lhs = I.power(n).intersect(J)
    rhs = I.power(n - h) * I.power(h).intersect(J)
    if not lhs.contains_ideal(rhs):
        raise InternalError(
            "I^(n-h)(I^h ∩ J) ⊆ I^n ∩ J failed; the engine is broken")
    for g in lhs.canonical_generators():
        if not rhs.contains(g):
            return False, g
    return True, None


def check_weak_ar(I: Ideal, J: Ideal, h: int, n: int) -> bool:
    """Does the containment I^n ∩ J ⊆ I^(n-h)·J hold?"""
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    lhs = I.power(n).intersect(J)
    rhs = I.power(n - h) * J
    return rhs.contains_ideal(lhs)


def check_mixed_intersection(N1: Ideal, N2: Ideal, h: int, n: int) -> bool:
    """Does N1 ∩ (N2 + m^n) ⊆ (N1 ∩ N2) + m^(n-h)·N1 hold?

    For every pair N1, N2 some h makes this true for all larger n; searching
    the least such h is done by scanning h upward.
    """
    if not 0 <= h < n:
        raise ValueError(f"need 0 <= h < n, got h={h}, n={n}")
    m = maximal_ideal(N1.ring)
    lhs = N1.intersect(N2 + m.power(n))
    rhs = N1.intersect(N2) + m.power(n - h) * N1
    return rhs.contains_ideal(lhs)


# ---------------------------------------------------------------------------
# exhaustive tables


@dataclass
class ArReport:
    """Result of an exhaustive (n, h) scan for one ideal pair.

    `minimal_h[n]` is the least h ≤ n making the strong identity hold at
    exponent n (h = n always works).  `uniform_h` is the least h valid for
    every h ≤ n ≤ nmax.  `witnesses[(n, h)]` certifies each failing cell.
    """

    I: Ideal
    J: Ideal
    nmax: int
    grid: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    minimal_h: dict = field(default_factory=dict)
    uniform_h: int | None = None
    complete: bool = True

    def cells(self):
        return sorted(self.grid)


def find_ar_table(I: Ideal, J: Ideal, nmax: int, threads: int = 1) -> ArReport:
    """Exhaustive strong-identity scan over 1 ≤ n ≤ nmax, 0 ≤ h ≤ n.

    Cells are independent and may be evaluated concurrently; the merged
    report is deterministic either way.  A resource cap in any cell flags
    the report incomplete instead of raising.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    report = ArReport(I=I, J=J, nmax=nmax)
    inter = {}
    try:
        for k in range(nmax + 1):
            I.power(k)
        for h in range(nmax + 1):
            inter[h] = I.power(h).intersect(J)
            inter[h].groebner()
    except ResourceLimitError:
        report.complete = False
        return report

    def cell(nh):
        n, h = nh
        lhs = inter[n]
        rhs = I.power(n - h) * inter[h]
        if not lhs.contains_ideal(rhs):
            raise InternalError(
                "I^(n-h)(I^h ∩ J) ⊆ I^n ∩ J failed; the engine is broken")
        for g in lhs.canonical_generators():
            if not rhs.contains(g):
                return nh, False, g
        return nh, True, None

    todo = [(n, h) for n in range(1, nmax + 1) for h in range(n + 1)]
    try:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(cell, todo))
        else:
            results = [cell(nh) for nh in todo]
    except ResourceLimitError:
        report.complete = False
        return report

    for nh, holds, witness in results:
        report.grid[nh] = holds
        if witness is not None:
            report.witnesses[nh] = witness
    for n in range(1, nmax + 1):
        row = [h for h in range(n + 1) if report.grid[(n, h)]]
        if not row:
            raise InternalError(f"h = n = {n} must always hold")
        least = row[0]
        if row != list(range(least, n + 1)):
            raise InternalError(
                f"monotonicity in h violated at n={n}: {row}")
        report.minimal_h[n] = least
    report.uniform_h = max(report.minimal_h.values())
    return report


# ---------------------------------------------------------------------------
# dimension-one machinery


def multiplicity(ring: RingPresentation,
                 horizon: int = MULTIPLICITY_HORIZON) -> int:
    """Hilbert-Samuel slope: the stabilized first difference of l(R/m^(n+1)).

    Requires a one-dimensional (graded sense) ring; detection is three equal
    consecutive differences within the horizon, anything else is an error.
    """
    m = maximal_ideal(ring)
    lengths = [m.power(n + 1).colength() for n in range(0, 3)]
    diffs = [lengths[i + 1] - lengths[i] for i in range(len(lengths) - 1)]
    for n in range(3, horizon + 1):
        lengths.append(m.power(n + 1).colength())
        diffs.append(lengths[-1] - lengths[-2])
        if len(diffs) >= 3 and diffs[-1] == diffs[-2] == diffs[-3]:
            e = diffs[-1]
            if e == 0:
                raise ContractError(
                    f"{ring!r} is zero-dimensional (lengths stabilize)")
            return e
    raise ContractError(
        f"Hilbert-Samuel differences did not stabilize for {ring!r}: "
        "dimension != 1 or horizon too small")


def find_reduction_element(I: Ideal, n: int, attempts: int = 64,
                           seed: int | None = None):
    """Search y ∈ I with I^n = y·I^(n-1); None when the budget runs out.

    Candidates are the generators themselves first, then reproducible random
    small-integer combinations (seeded from a hash of the input unless an
    explicit seed is given).  Requires an m-primary proper ideal.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ring = I.ring
    m = maximal_ideal(ring)
    if I.is_unit or not I.generators or not I.saturate(m).is_unit:
        raise ContractError("reduction elements are searched in m-primary "
                            "proper ideals only")
    if seed is None:
        blob = repr(ring) + "|".join(sorted(str(g) for g in I.generators))
        seed = int.from_bytes(
            hashlib.sha256(f"{blob}|{n}".encode()).digest()[:8], "big")
    rng = random.Random(seed)
    gens = I.generators
    target = I.power(n)
    base = I.power(n - 1)

    def works(y):
        return target.equals(Ideal(ring, [y]) * base)

    tried = 0
    for y in gens:
        tried += 1
        if works(y):
            return y
        if tried >= attempts:
            return None
    while tried < attempts:
        coeffs = [rng.randint(-2, 2) for _ in gens]
        if not any(coeffs):
            continue
        y = ring.zero()
        for c, g in zip(coeffs, gens):
            y = y + c * g
        if y.is_zero:
            continue
        tried += 1
        if works(y):
            return y
    return None


def h0_length(J: Ideal) -> int:
    """Length of (J : m^∞)/J, the finite piece of R/J supported at m.

    Computed as the degreewise dimension gap between R/J and R/(J : m^∞),
    summed up to a provable top degree: with N minimal such that
    m^N·(J:m^∞) ⊆ J, no gap survives past maxdeg(sat) + (N-1)·max(weights).
    """
    J.require_homogeneous()
    ring = J.ring
    m = maximal_ideal(ring)
    sat = J.saturate(m)
    if sat.equals(J):
        return 0
    for N in range(1, ANNIHILATION_CAP + 1):
        if J.contains_ideal(m.power(N) * sat):
            break
    else:
        raise ResourceLimitError(
            f"m^N·sat ⊆ J not reached within N <= {ANNIHILATION_CAP}")
    top = max(int(g.weighted_degree()) for g in sat.generators)
    top += (N - 1) * max(ring.weights)
    total = 0
    for d in range(top + 1):
        gap = J.graded_dim(d) - sat.graded_dim(d)
        if gap < 0:
            raise InternalError("saturation lost a graded dimension")
        total += gap
    return total


def uniform_ar_bound(ring: RingPresentation, J: Ideal) -> int:
    """A-priori uniform Artin-Rees number for the pair (J, R), dimension one.

    Evaluates max{r, l} + l with l the length of the m-finite piece of R/J
    and r the multiplicity of R/J.  Only the Cohen-Macaulay case (l = 0) is
    computable here; otherwise a BoundUnavailableError asks callers to fall
    back to the empirical table.
    """
    if J.ring != ring:
        raise ContractError("J must be an ideal of the given ring")
    ell = h0_length(J)
    if ell > 0:
        raise BoundUnavailableError(
            "R/J is not Cohen-Macaulay (finite m-torsion of length "
            f"{ell}); no a-priori bound is computed - use the empirical table")
    quotient = ring.quotient + tuple(g.lift() for g in J.generators)
    rbar = RingPresentation(ring.field, ring.variables, ring.weights,
                            ring.order, quotient)
    r = multiplicity(rbar)
    return max(r, ell) + ell


# ---------------------------------------------------------------------------
# relation type


@dataclass
class ReltypeReport:
    """Relation type of an ideal with the witnessing Rees-kernel data.

    `kernel_basis` is the reduced basis of the presentation kernel L in the
    tag ring R[T1..Tm] (quotient generators omitted); `reltype` is the least
    d such that the elements of T-degree ≤ d generate L; `certificate` lists
    exactly those elements.
    """

    ideal: Ideal
    minimized_generators: tuple
    tag_ring: RingPresentation
    kernel_basis: tuple
    reltype: int
    certificate: tuple


def minimal_generators(I: Ideal):
    """Degree-by-degree minimization of the generator list (canonical order)."""
    ring = I.ring
    order = ring.order

    def sort_key(g):
        return (int(g.weighted_degree()), order.key(g.leading_monomial()),
                str(g))

    kept = []
    for g in sorted(I.generators, key=sort_key):
        g = ring.reduce(g)
        if g.is_zero:
            continue
        if kept and Ideal(ring, kept).contains(g):
            continue
        if not kept and ring.is_quotient and ring.quotient_basis().contains(g.lift()):
            continue
        kept.append(g.primitive())
    return kept


def reltype(I: Ideal) -> ReltypeReport:
    """Relation type: least d with the Rees kernel generated in T-degrees ≤ d.

    Maps R[T1..Tm] onto the Rees algebra by Ti -> fi·t, computes the kernel L
    by eliminating t from the graph ideal (Ti - t·fi) + Q, and scans d upward
    until the higher-degree basis elements become redundant.  Generators are
    minimized first; the result does not depend on the input order.
    """
    gens = minimal_generators(I)
    if not gens:
        raise ContractError("relation type of the zero ideal is undefined")
    ring = I.ring
    amb = ring.ambient
    m = len(gens)
    taken = set(amb.variables)
    tnames = []
    for i in range(1, m + 1):
        name = f"T{i}"
        while name in taken:
            name += "_"
        taken.add(name)
        tnames.append(name)
    tag = "#t"
    ext_vars = (tag,) + amb.variables + tuple(tnames)
    ext_w = (1,) + amb.weights + (1,) * m
    ext = RingPresentation(amb.field, ext_vars, ext_w,
                           elimination_order(1, ext_w))

    nx = amb.nvars

    def up(p):
        return Polynomial(
            ext, {(0,) + e + (0,) * m: c for e, c in p._terms.items()},
            _clean=True)

    t = ext.var(tag)
    graph = []
    for i, f in enumerate(gens):
        ti = ext.var(tnames[i])
        graph.append(ti - t * up(f.lift()))
    graph += [up(q) for q in ring.quotient]
    gb = buchberger(graph, ring=ext)
    elim = eliminate(gb, 1)
    elim_ring = elim.ring

    def tdeg(p):
        degs = {sum(e[nx:]) for e in p._terms}
        if len(degs) != 1:
            raise InternalError(f"kernel element not T-homogeneous: {p}")
        return degs.pop()

    elements = [(tdeg(p), p) for p in elim]
    tzero = [p for d, p in elements if d == 0]
    tpos = sorted(((d, p) for d, p in elements if d > 0), key=lambda dp: dp[0])

    report_ring = RingPresentation(amb.field, amb.variables + tuple(tnames),
                                   amb.weights + (1,) * m, "grevlex")
    if not tpos:
        return ReltypeReport(I, tuple(gens), report_ring, (), 1, ())

    maxd = tpos[-1][0]
    rt = maxd
    for d in range(1, maxd + 1):
        higher = [p for dd, p in tpos if dd > d]
        if not higher:
            rt = d
            break
        lower = tzero + [p for dd, p in tpos if dd <= d]
        lower_gb = buchberger(lower, ring=elim_ring)
        if all(lower_gb.contains(p) for p in higher):
            rt = d
            break
    kernel = tuple(p.retag(report_ring) for _, p in tpos)
    cert = tuple(p.retag(report_ring) for dd, p in tpos if dd <= rt)
    return ReltypeReport(I, tuple(gens), report_ring, kernel, rt, cert)


def check_reltype_transfer(I: Ideal, J: Ideal, h: int, nmax: int) -> bool:
    """With h ≥ reltype of the image of I in R/J, the strong identity
    I^n ∩ J = I^(n-h)(I^h ∩ J) is forced for every n > h; verify it up to
    nmax.  A False here means the engine is broken, never the mathematics.
    """
    if h < 1:
        raise ValueError("h must be >= 1 (relation types are >= 1)")
    if nmax < h:
        raise ValueError("nmax must be >= h")
    for n in range(h + 1, nmax + 1):
        ok, _ = check_strong_ar(I, J, h, n)
        if not ok:
            return False
    return True


def reltype_modulo(I: Ideal, J: Ideal) -> ReltypeReport:
    """Relation type of the image of I in R/J (quotient presentation)."""
    ring = I.ring
    quotient = ring.quotient + tuple(g.lift() for g in J.generators)
    rbar = RingPresentation(ring.field, ring.variables, ring.weights,
                            ring.order, quotient)
    image = Ideal(rbar, [g.lift().retag(rbar) for g in I.generators])
    return reltype(image)


# ---------------------------------------------------------------------------
# built-in dimension-two families


@dataclass(frozen=True)
class ExampleVerdict:
    """Outcome of a built-in family check at one exponent n.

    The family provides a witness element of I^n ∩ J; a verdict is the pair
    of membership answers (in the intersection: expected yes; in the shifted
    product I(I^(n-1) ∩ J): expected no) plus an exact check of the algebraic
    identity that produces the witness.
    """

    family: int
    n: int
    witness: Polynomial
    in_intersection: bool
    in_shifted_product: bool
    identity_holds: bool

    @property
    def ok(self) -> bool:
        return (self.in_intersection and not self.in_shifted_product
                and self.identity_holds)


def example1_ring(n: int, fieldk=QQ):
    """k[x,y,z]/(z^2) graded with deg x = deg y = 1, deg z = n."""
    amb = RingPresentation(fieldk, ("x", "y", "z"), weights=(1, 1, n))
    z = amb.var("z")
    return amb.with_quotient([z ** 2])


def example1_ideal(n: int, ring: RingPresentation) -> Ideal:
    x, y, z = ring.gens()
    return Ideal(ring, [x ** n, y ** n, x ** (n - 1) * y + z])


def verify_example1(n: int, fieldk=QQ) -> ExampleVerdict:
    """Family 1: R = k[x,y,z]/(z^2), I_n = (x^n, y^n, x^(n-1)y + z), J = (z).

    The witness xi = x^((n-1)^2) y^(n-1) z satisfies n·xi =
    (x^(n-1)y + z)^n - x^(n(n-1)) y^n modulo z^2, so xi lies in I_n^n ∩ J
    whenever n is invertible, yet not in I_n(I_n^(n-1) ∩ J).
    """
    if n < 2:
        raise ValueError("the family needs n >= 2")
    char = fieldk.characteristic
    if char and n % char == 0:
        raise ContractError(
            f"characteristic {char} divides n = {n}; the witness identity "
            "degenerates")
    ring = example1_ring(n, fieldk)
    x, y, z = ring.gens()
    I = example1_ideal(n, ring)
    J = Ideal(ring, [z])
    xi = x ** ((n - 1) ** 2) * y ** (n - 1) * z
    lhs = (x ** (n - 1) * y + z) ** n - x ** (n * (n - 1)) * y ** n
    identity = ring.reduce(lhs - n * xi).is_zero
    in_inter = I.power(n).intersect(J).contains(xi)
    in_prod = (I * I.power(n - 1).intersect(J)).contains(xi)
    return ExampleVerdict(1, n, xi, in_inter, in_prod, identity)


def example2_ring(fieldk=QQ):
    """k[x,y,z]/(xz) with the standard grading."""
    amb = RingPresentation(fieldk, ("x", "y", "z"))
    x, _, z = amb.gens()
    return amb.with_quotient([x * z])


def example2_ideal(n: int, ring: RingPresentation) -> Ideal:
    x, y, z = ring.gens()
    return Ideal(ring, [x ** n, y ** n, x ** (n - 1) * y + z ** n])


def verify_example2(n: int, fieldk=QQ) -> ExampleVerdict:
    """Family 2 (reduced ring): R = k[x,y,z]/(xz), I_n = (x^n, y^n,
    x^(n-1)y + z^n), J = (z).

    Here z^(n^2) = (x^(n-1)y + z^n)^n - x^(n(n-1)) y^n holds in R for every
    characteristic (the cross terms all carry xz), and z^(n^2) lies in
    I_n^n ∩ J but not in I_n(I_n^(n-1) ∩ J).
    """
    if n < 2:
        raise ValueError("the family needs n >= 2")
    ring = example2_ring(fieldk)
    x, y, z = ring.gens()
    I = example2_ideal(n, ring)
    J = Ideal(ring, [z])
    target = z ** (n * n)
    lhs = (x ** (n - 1) * y + z ** n) ** n - x ** (n * (n - 1)) * y ** n
    identity = ring.reduce(lhs - target).is_zero
    in_inter = I.power(n).intersect(J).contains(target)
    in_prod = (I * I.power(n - 1).intersect(J)).contains(target)
    return ExampleVerdict(2, n, target, in_inter, in_prod, identity)

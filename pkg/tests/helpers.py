"""Independent oracles and small generators shared by the test modules.

Everything here stays away from the code paths it is used to check: the
rank/length oracles are plain linear algebra over Fraction matrices, the
membership cross-checks go through the degree-truncated solver, and the
Groebner confluence oracle only uses s_polynomial/normal_form against a
candidate basis.
"""

from fractions import Fraction
from itertools import permutations

from arck.groebner import normal_form, s_polynomial
from arck.ideals import monomials_of_weighted_degree
from arck.poly import mono_mul


def random_poly(ring, rng, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * ring.nvars
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = rng.randint(-3, 3)
    return ring.from_terms(terms)


def random_homog_poly(ring, rng, wdeg):
    monos = monomials_of_weighted_degree(ring, wdeg)
    terms = {m: rng.randint(-2, 2) for m in monos if rng.random() < 0.7}
    return ring.from_terms(terms)


def confluent_groebner_oracle(gens, gb):
    """Certify gb is a Groebner basis containing <gens>:
    every S-pair of gb reduces to zero against gb, and every input generator
    reduces to zero against gb."""
    basis = list(gb)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j]), gb).is_zero:
                return False
    return all(normal_form(g, gb).is_zero for g in gens if not g.is_zero)


def is_reduced_basis(gb):
    """Monic, minimal, and mutually irreducible."""
    basis = list(gb)
    for p in basis:
        if p.leading_coeff() != p.ring.field.one:
            return False
    lms = [p.leading_monomial() for p in basis]
    for i, p in enumerate(basis):
        others = [lm for j, lm in enumerate(lms) if j != i]
        for mono in p._terms:
            if any(all(a <= b for a, b in zip(lm, mono)) for lm in others):
                return False
    return True


def permuted_copies(gens, rng, count=3):
    gens = list(gens)
    if len(gens) <= 5:
        pool = list(permutations(gens))
        rng.shuffle(pool)
        return [list(p) for p in pool[:count]]
    out = []
    for _ in range(count):
        p = gens[:]
        rng.shuffle(p)
        out.append(p)
    return out


def truncated_equal(I, J, dmax):
    """Degreewise equality oracle for homogeneous ideals up to degree dmax:
    equal graded dimensions plus mutual generator membership."""
    for d in range(dmax + 1):
        if I.graded_dim(d) != J.graded_dim(d):
            return False
    for g in I.generators:
        if g.weighted_degree() <= dmax and not J.contains_truncated(g, dmax):
            return False
    for g in J.generators:
        if g.weighted_degree() <= dmax and not I.contains_truncated(g, dmax):
            return False
    return True


def fraction_rank(rows):
    """Row rank of a dense matrix over Fraction."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def brute_length(ring, extra_gens, level):
    """dim_k of k[vars]/(Q + extra + m^level) by rank over the monomial basis
    of degree < level; no Groebner machinery involved."""
    amb = ring.ambient
    monos = []
    for d in range(level):
        monos.extend(_plain_degree_monos(amb.nvars, d))
    index = {m: i for i, m in enumerate(monos)}
    gens = list(ring.quotient) + [g.lift() for g in extra_gens]
    rows = []
    for g in gens:
        for mu in monos:
            row = [Fraction(0)] * len(monos)
            for e, c in g._terms.items():
                prod = mono_mul(e, mu)
                # terms pushed past the cutoff vanish in the truncation
                if sum(prod) < level:
                    row[index[prod]] += Fraction(c)
            if any(row):
                rows.append(row)
    return len(monos) - fraction_rank(rows)


def _plain_degree_monos(nvars, d):
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        out.extend((e,) + rest for rest in _plain_degree_monos(nvars - 1, d - e))
    return out

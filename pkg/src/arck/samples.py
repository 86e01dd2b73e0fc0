"""Deterministic generators for sampled ideal families.

Uniform-bound statements quantify over every ideal of a ring; a finite tool
can only exercise sampled families.  These helpers draw reproducible random
homogeneous ideals (seeded explicitly), used by the test and acceptance
suites and available to library users for their own experiments.
"""

from __future__ import annotations

import random

from .ideals import Ideal, maximal_ideal, monomials_of_weighted_degree
from .poly import RingPresentation


def random_homogeneous_poly(ring: RingPresentation, wdeg: int,
                            rng: random.Random, coeff_pool=(-2, -1, 1, 2)):
    """A random nonzero weighted-homogeneous polynomial of degree `wdeg`."""
    monos = monomials_of_weighted_degree(ring, wdeg)
    if not monos:
        return ring.zero()
    while True:
        terms = {}
        for m in monos:
            if rng.random() < 0.6:
                terms[m] = rng.choice(coeff_pool)
        if terms:
            return ring.from_terms(terms)


def sample_m_primary_ideals(ring: RingPresentation, count: int, seed: int,
                            max_degree: int = 4, max_gens: int = 3,
                            max_draws: int = 4000):
    """`count` distinct proper homogeneous m-primary ideals, reproducibly.

    Draws random homogeneous generator sets and keeps those whose saturation
    at the graded maximal ideal is the unit ideal.
    """
    rng = random.Random(seed)
    m = maximal_ideal(ring)
    found = []
    seen = set()
    for _ in range(max_draws):
        if len(found) >= count:
            break
        ngens = rng.randint(2, max_gens)
        gens = []
        for _ in range(ngens):
            wdeg = rng.randint(min(ring.weights), max_degree)
            g = random_homogeneous_poly(ring, wdeg, rng)
            if not g.is_zero:
                gens.append(g)
        if not gens:
            continue
        ideal = Ideal(ring, gens)
        key = tuple(str(p) for p in ideal.groebner())
        if key in seen:
            continue
        if ideal.is_unit or ideal.is_zero:
            continue
        if not ideal.saturate(m).is_unit:
            continue
        seen.add(key)
        found.append(ideal)
    if len(found) < count:
        raise RuntimeError(
            f"only {len(found)} m-primary samples found in {max_draws} draws")
    return found


def sample_homogeneous_ideals(ring: RingPresentation, count: int, seed: int,
                              max_degree: int = 3, max_gens: int = 3):
    """Arbitrary proper homogeneous ideals (not necessarily m-primary)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ngens = rng.randint(1, max_gens)
        gens = [random_homogeneous_poly(ring, rng.randint(1, max_degree), rng)
                for _ in range(ngens)]
        ideal = Ideal(ring, [g for g in gens if not g.is_zero])
        if ideal.generators and not ideal.is_unit:
            out.append(ideal)
    return out

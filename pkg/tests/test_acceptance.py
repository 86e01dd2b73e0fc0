"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
land.  Everything is exact arithmetic; there are no tolerances to tune.
"""

import random
import sys
import time
from contextlib import contextmanager

from arck.artinrees import (check_reltype_transfer, example1_ideal,
                            example1_ring, find_ar_table,
                            find_reduction_element, h0_length, multiplicity,
                            reltype, uniform_ar_bound, verify_example1,
                            verify_example2)
from arck.coeff import QQ
from arck.groebner import buchberger, normal_form, s_polynomial
from arck.ideals import Ideal, maximal_ideal
from arck.poly import RingPresentation
from arck.samples import sample_m_primary_ideals

from helpers import (confluent_groebner_oracle, is_reduced_basis,
                     permuted_copies, random_homog_poly, random_poly)

RUNTIME_LIMIT = 60.0  # seconds per family exponent


@contextmanager
def criterion(num, desc):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE criterion {num}: FAIL - {desc}", flush=True)
        raise
    print(f"ACCEPTANCE criterion {num}: PASS - {desc}", flush=True)


def test_criterion_1_family1_counterexample():
    with criterion(1, "family 1 verdicts and witness identity, n = 2, 3, 4"):
        for n in (2, 3, 4):
            t0 = time.perf_counter()
            v = verify_example1(n)
            elapsed = time.perf_counter() - t0
            assert v.in_intersection is True
            assert v.in_shifted_product is False
            assert v.identity_holds is True  # exact: lhs - n*xi reduces to 0
            assert elapsed < RUNTIME_LIMIT


def test_criterion_2_family2_counterexample():
    with criterion(2, "family 2 verdicts and witness identity, n = 2, 3, 4"):
        for n in (2, 3, 4):
            t0 = time.perf_counter()
            v = verify_example2(n)
            elapsed = time.perf_counter() - t0
            assert v.in_intersection is True
            assert v.in_shifted_product is False
            assert v.identity_holds is True
            assert elapsed < RUNTIME_LIMIT


def test_criterion_3_no_uniform_number_for_family1():
    with criterion(3, "family 1 minimal instance number grows: h(n) >= n"):
        for n in (2, 3, 4):
            ring = example1_ring(n)
            I = example1_ideal(n, ring)
            J = Ideal(ring, [ring.var("z")])
            report = find_ar_table(I, J, n)
            assert report.complete
            assert report.minimal_h[n] >= n


def test_criterion_4_exact_univariate_table():
    with criterion(4, "k[x], I=(x), J=(x^2): minimal h = 2 for n >= 2, "
                      "uniform h = 2, nmax = 8"):
        ring = RingPresentation(QQ, ("x",))
        (x,) = ring.gens()
        report = find_ar_table(Ideal(ring, [x]), Ideal(ring, [x ** 2]), 8)
        assert report.complete
        assert report.minimal_h[1] == 1
        for n in range(2, 9):
            assert report.minimal_h[n] == 2
        assert report.uniform_h == 2


def _reltype_bound_family(make_quotient, seed, max_degree, count=25):
    ring = make_quotient()
    amb = ring.ambient
    J_amb = Ideal(amb, list(ring.quotient))
    e = multiplicity(ring)
    assert e == 2
    samples = sample_m_primary_ideals(ring, count, seed=seed,
                                      max_degree=max_degree)
    for I in samples:
        rep = reltype(I)
        assert 1 <= rep.reltype <= e
        lifted = Ideal(amb, [g.lift() for g in I.generators])
        assert check_reltype_transfer(lifted, J_amb, rep.reltype, 6)


def test_criterion_5_relation_type_bound_and_transfer():
    with criterion(5, ">= 25 m-primary samples in k[x,y]/(x^2) and the cusp: "
                      "reltype <= e = 2 and the transfer identity holds to "
                      "nmax = 6"):
        def hypersurface():
            amb = RingPresentation(QQ, ("x", "y"))
            return amb.with_quotient([amb.var("x") ** 2])

        def cusp():
            amb = RingPresentation(QQ, ("x", "y"), weights=(2, 3))
            x, y = amb.gens()
            return amb.with_quotient([y ** 2 - x ** 3])

        _reltype_bound_family(hypersurface, seed=501, max_degree=4)
        _reltype_bound_family(cusp, seed=502, max_degree=12)


def test_criterion_6_theorem_bound_consistency():
    with criterion(6, "k[x,y]/(x^2), J=(x): a-priori bound 1 dominates the "
                      "empirical uniform h on >= 20 samples, nmax = 6"):
        amb = RingPresentation(QQ, ("x", "y"))
        ring = amb.with_quotient([amb.var("x") ** 2])
        J = Ideal(ring, [ring.var("x")])
        assert h0_length(J) == 0
        bound = uniform_ar_bound(ring, J)
        assert bound == 1
        for I in sample_m_primary_ideals(ring, 20, seed=601):
            report = find_ar_table(I, J, 6)
            assert report.complete
            assert report.uniform_h <= bound


def test_criterion_7_engine_properties():
    with criterion(7, "200 random ideals: reduced-basis uniqueness, S-pair "
                      "confluence, NF laws; 100 membership queries agree "
                      "with the truncated solver"):
        rng = random.Random(701)
        rings = [
            RingPresentation(QQ, ("x", "y")),
            RingPresentation(QQ, ("x", "y"), order="lex"),
            RingPresentation(QQ, ("x", "y", "z")),
        ]
        for _ in range(200):
            ring = rng.choice(rings)
            gens = [random_poly(ring, rng, max_deg=3)
                    for _ in range(rng.randint(1, 3))]
            gb = buchberger(gens, ring=ring)
            assert is_reduced_basis(gb)
            assert confluent_groebner_oracle(gens, gb)
            for perm in permuted_copies(gens, rng, count=1):
                assert buchberger(perm, ring=ring) == gb
            f, g = random_poly(ring, rng), random_poly(ring, rng)
            c = rng.randint(-4, 4)
            nf = gb.normal_form
            assert nf(f + g) == nf(nf(f) + nf(g))
            assert nf(c * f) == c * nf(f)
            assert nf(nf(f)) == nf(f)

        checked = 0
        while checked < 100:
            ring = rng.choice(rings)
            gens = [random_homog_poly(ring, rng, rng.randint(1, 3))
                    for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero]
            f = random_homog_poly(ring, rng, rng.randint(1, 6))
            if not gens or f.is_zero:
                continue
            I = Ideal(ring, gens)
            assert I.contains(f) == I.contains_truncated(f, 6)
            checked += 1


def test_criterion_8_reduction_elements():
    with criterion(8, "k[x,y]/(x^2): m^2 = y*m and >= 10 m-primary samples "
                      "admit a reduction element at some n <= e = 2"):
        amb = RingPresentation(QQ, ("x", "y"))
        ring = amb.with_quotient([amb.var("x") ** 2])
        e = multiplicity(ring)
        assert e == 2
        m = maximal_ideal(ring)
        y = find_reduction_element(m, 2)
        assert y == ring.var("y")
        for I in sample_m_primary_ideals(ring, 10, seed=801):
            assert any(find_reduction_element(I, n) is not None
                       for n in range(1, e + 1))


if __name__ == "__main__":  # pragma: no cover
    import pytest
    sys.exit(pytest.main([__file__, "-v", "-s"]))

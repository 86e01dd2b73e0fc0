import random

import pytest

from arck.coeff import QQ
from arck.errors import ContractError, StructureError
from arck.ideals import Ideal, maximal_ideal, monomials_of_weighted_degree
from arck.poly import RingPresentation

from helpers import random_homog_poly, random_poly, truncated_equal


# -- constructors ---------------------------------------------------------------


def test_power_of_two_generators(kxy):
    x, y = kxy.gens()
    sq = Ideal(kxy, [x, y]).power(2)
    assert sq.equals(Ideal(kxy, [x ** 2, x * y, y ** 2]))


def test_power_one_is_identity(kxy):
    x, y = kxy.gens()
    I = Ideal(kxy, [x ** 2 + y, y ** 3])
    assert I.power(1) is I
    assert I.power(0).is_unit


def test_family1_membership_after_expansion(ring_z2):
    # (xy + z)^2 - x^2 y^2 = 2xyz + z^2 lies in I2^2 when z^2 is killed
    x, y, z = ring_z2.gens()
    I2 = Ideal(ring_z2, [x ** 2, y ** 2, x * y + z])
    f = (x * y + z) ** 2 - x ** 2 * y ** 2
    assert I2.power(2).contains(f)


# -- intersection ------------------------------------------------------------------


def test_intersect_principal(kxy):
    x, y = kxy.gens()
    inter = Ideal(kxy, [x]).intersect(Ideal(kxy, [y]))
    assert inter.equals(Ideal(kxy, [x * y]))


def test_intersect_with_unit(kxy):
    x, y = kxy.gens()
    I = Ideal(kxy, [x ** 2, x * y + y ** 3])
    assert I.intersect(Ideal(kxy, [kxy.one()])).equals(I)


def test_intersect_in_quotient_ring(ring_z2):
    x, y, z = ring_z2.gens()
    inter = Ideal(ring_z2, [z]).intersect(Ideal(ring_z2, [x]))
    expected = Ideal(ring_z2, [x * z])
    assert inter.equals(expected)
    assert truncated_equal(inter, expected, 6)


# -- colon and saturation --------------------------------------------------------------


def test_colon_by_element(kxy):
    x, y = kxy.gens()
    quot = Ideal(kxy, [x ** 2, x * y]).colon(x)
    assert quot.equals(Ideal(kxy, [x, y]))


def test_colon_by_one(kxy):
    x, y = kxy.gens()
    I = Ideal(kxy, [x ** 3, y - x])
    assert I.colon(kxy.one()).equals(I)


def test_colon_in_quotient_ring(ring_z2):
    # (xz : z) picks up z because z*z = 0 in the quotient
    x, y, z = ring_z2.gens()
    quot = Ideal(ring_z2, [x * z]).colon(z)
    expected = Ideal(ring_z2, [x, z])
    assert quot.equals(expected)
    for g in quot.generators:
        assert expected.contains_truncated(g, 6)
    for g in expected.generators:
        assert quot.contains_truncated(g, 6)
    assert expected.contains(z * z) and Ideal(ring_z2, [x * z]).contains(z * z)


def test_colon_by_ideal(kxy):
    x, y = kxy.gens()
    I = Ideal(kxy, [x ** 2, x * y])
    assert I.colon(Ideal(kxy, [x, y])).equals(Ideal(kxy, [x]))


def test_saturate_stabilizes_in_one_step(kxy):
    x, y = kxy.gens()
    m = maximal_ideal(kxy)
    I = Ideal(kxy, [x ** 2, x * y])
    # oracle: one colon step reaches (x), which is already saturated
    step = I.colon(m)
    assert step.equals(Ideal(kxy, [x]))
    assert step.colon(m).equals(step)
    assert I.saturate(m).equals(Ideal(kxy, [x]))


def test_saturate_prime_like_fixed(kxy):
    x, _ = kxy.gens()
    I = Ideal(kxy, [x])
    assert I.saturate(maximal_ideal(kxy)).equals(I)


def test_saturate_m_primary_is_unit(kxy):
    x, y = kxy.gens()
    J = Ideal(kxy, [x ** 2, y ** 3])
    assert J.saturate(maximal_ideal(kxy)).is_unit


# -- membership and equality ------------------------------------------------------------


def test_member_powers(ring_z2):
    x, y, z = ring_z2.gens()
    assert Ideal(ring_z2, [z]).contains(z ** 4)
    assert Ideal(ring_z2, [z]).contains(z * z)  # z^2 = 0 in the ring


def test_member_negative(kxy):
    x, y = kxy.gens()
    assert not Ideal(kxy, [y]).contains(x)


def test_family1_core_nonmembership(ring_z2):
    x, y, z = ring_z2.gens()
    I2 = Ideal(ring_z2, [x ** 2, y ** 2, x * y + z])
    J = Ideal(ring_z2, [z])
    rhs = I2 * I2.power(1).intersect(J)
    assert not rhs.contains(x * y * z)


def test_equal_is_equivalence(kxy):
    rng = random.Random(5)
    ideals = []
    for _ in range(6):
        gens = [random_poly(kxy, rng) for _ in range(rng.randint(1, 2))]
        I = Ideal(kxy, gens)
        doubled = Ideal(kxy, gens + [gens[0] * gens[-1]])
        ideals.append((I, doubled))
    for I, J in ideals:
        assert I.equals(I)
        assert I.equals(J) == J.equals(I)
        if I.equals(J):
            assert all(I.contains(g) for g in J.generators)
            assert all(J.contains(g) for g in I.generators)


# -- graded data ---------------------------------------------------------------------


def test_graded_dim_m_squared(kxy):
    I = Ideal(kxy, [g for g in
                    (kxy.var("x") ** 2, kxy.var("x") * kxy.var("y"),
                     kxy.var("y") ** 2)])
    assert I.graded_dim(1) == 2
    assert I.graded_dim(2) == 0


def test_graded_dim_zero_ideal(kxy):
    assert Ideal(kxy, []).graded_dim(2) == 3


def test_std_monomials_listed(kxy):
    x, _ = kxy.gens()
    I = Ideal(kxy, [x ** 2])
    got = set(I.std_monomials(5))
    # oracle: direct enumeration and divisibility filter
    expected = {(a, 5 - a) for a in range(6) if a < 2}
    assert got == expected == {(0, 5), (1, 4)}
    assert I.graded_dim(5) == 2


def test_graded_dim_rejects_inhomogeneous(kxy):
    x, y = kxy.gens()
    with pytest.raises(ContractError) as err:
        Ideal(kxy, [x ** 2 + y]).graded_dim(2)
    assert "x^2 + y" in str(err.value)


def test_weighted_enumeration(ring_cusp):
    # weights (2, 3): degree-6 monomials are x^3 and y^2
    assert set(monomials_of_weighted_degree(ring_cusp, 6)) == {(3, 0), (0, 2)}


# -- truncated membership oracle ---------------------------------------------------------


def test_truncated_family1_witness(ring_z2):
    x, y, z = ring_z2.gens()
    I2sq = Ideal(ring_z2, [x ** 2, y ** 2, x * y + z]).power(2)
    assert I2sq.contains_truncated(x * y * z, 6)


def test_truncated_unit_ideal(kxy):
    x, y = kxy.gens()
    unit = Ideal(kxy, [kxy.one()])
    assert unit.contains_truncated(x ** 2 - 3 * x * y, 6)


def test_truncated_negative(kxy):
    x, y = kxy.gens()
    assert not Ideal(kxy, [y]).contains_truncated(x, 6)


def test_truncated_rejects_inhomogeneous_query(kxy):
    x, y = kxy.gens()
    with pytest.raises(ContractError):
        Ideal(kxy, [y]).contains_truncated(x + x ** 2, 6)


def test_oracle_equivalence_randomized():
    # homogeneous membership decided by bases matches the linear solver
    rng = random.Random(31)
    rings = [
        RingPresentation(QQ, ("x", "y")),
        RingPresentation(QQ, ("x", "y", "z")),
    ]
    checked = 0
    while checked < 40:
        ring = rng.choice(rings)
        gens = [random_homog_poly(ring, rng, rng.randint(1, 3))
                for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if not g.is_zero]
        if not gens:
            continue
        I = Ideal(ring, gens)
        f = random_homog_poly(ring, rng, rng.randint(1, 6))
        if f.is_zero:
            continue
        assert I.contains(f) == I.contains_truncated(f, 6)
        checked += 1


# -- algebra laws -------------------------------------------------------------------------


def test_algebra_laws_randomized(kxy):
    rng = random.Random(13)
    for _ in range(25):
        I = Ideal(kxy, [random_poly(kxy, rng) for _ in range(rng.randint(1, 2))])
        J = Ideal(kxy, [random_poly(kxy, rng) for _ in range(rng.randint(1, 2))])
        assert (I + J).contains_ideal(I)
        assert I.intersect(J).contains_ideal(I * J)
        a, b = rng.randint(1, 2), rng.randint(1, 2)
        assert I.power(a + b).equals(I.power(a) * I.power(b))
        if I.generators:
            f = I.generators[0]
            colon = I.colon(f) if not f.is_zero else None
            if colon is not None:
                assert I.contains_ideal(colon * Ideal(kxy, [f]))


def test_ring_mismatch_rejected(kxy, kxy_lex):
    I = Ideal(kxy, [kxy.var("x")])
    J = Ideal(kxy_lex, [kxy_lex.var("x")])
    with pytest.raises(StructureError):
        I.intersect(J)
    with pytest.raises(StructureError):
        I + J

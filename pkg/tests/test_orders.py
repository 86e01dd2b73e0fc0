import random

import pytest

from arck.errors import StructureError
from arck.orders import (EQ, GT, LT, elimination_order, grevlex_order,
                         lex_order, make_order)
from arck.poly import mono_mul


def random_mono(rng, nvars, max_e=6):
    return tuple(rng.randint(0, max_e) for _ in range(nvars))


def test_lex_example():
    order = lex_order(2)
    assert order.compare((2, 1), (1, 2)) == GT  # x^2 y > x y^2


def test_grevlex_tiebreak_example():
    order = grevlex_order((1, 1))
    assert order.compare((2, 1), (1, 2)) == GT  # equal degree, tie-break


def test_compare_equal():
    for order in (lex_order(3), grevlex_order((1, 1, 2))):
        m = (3, 0, 2)
        assert order.compare(m, m) == EQ


def test_compare_length_mismatch():
    with pytest.raises(StructureError):
        lex_order(2).compare((1, 2, 3), (1, 2))


def test_make_order_rejects_unknown():
    with pytest.raises(StructureError):
        make_order("deglex", (1, 1))


@pytest.mark.parametrize("order", [
    lex_order(3),
    grevlex_order((1, 1, 1)),
    grevlex_order((1, 2, 3)),
    elimination_order(1, (1, 1, 1)),
    elimination_order(2, (1, 1, 2)),
], ids=["lex", "grevlex", "wgrevlex", "block1", "block2"])
def test_order_axioms(order):
    rng = random.Random(7)
    one = (0,) * order.nvars
    for _ in range(300):
        a, b, c = (random_mono(rng, order.nvars) for _ in range(3))
        cmp_ab = order.compare(a, b)
        # totality + antisymmetry
        assert cmp_ab == -order.compare(b, a)
        assert (cmp_ab == EQ) == (a == b)
        # multiplicativity
        assert order.compare(mono_mul(a, c), mono_mul(b, c)) == cmp_ab
        # 1 is minimal
        if a != one:
            assert order.compare(a, one) == GT


def test_elimination_property():
    rng = random.Random(11)
    order = elimination_order(2, (1, 1, 1, 1))
    for _ in range(200):
        front = random_mono(rng, 4)
        back = random_mono(rng, 4)
        front = (front[0] + 1, front[1]) + front[2:]  # touches block 1
        back = (0, 0) + back[2:]                      # free of block 1
        assert order.compare(front, back) == GT
    # lex eliminates every prefix
    assert lex_order(4).nelim == 4
    assert order.restrict(2).nvars == 2


def test_restrict_requires_elimination():
    with pytest.raises(StructureError):
        grevlex_order((1, 1, 1)).restrict(1)

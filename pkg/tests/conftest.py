import pytest

from arck.coeff import QQ
from arck.poly import RingPresentation


@pytest.fixture
def kxy():
    return RingPresentation(QQ, ("x", "y"))


@pytest.fixture
def kxy_lex():
    return RingPresentation(QQ, ("x", "y"), order="lex")


@pytest.fixture
def ring_z2():
    """k[x,y,z]/(z^2) graded with deg z = 2 (the n = 2 member of family 1)."""
    amb = RingPresentation(QQ, ("x", "y", "z"), weights=(1, 1, 2))
    z = amb.var("z")
    return amb.with_quotient([z ** 2])


@pytest.fixture
def ring_x2():
    """k[x,y]/(x^2): one-dimensional Cohen-Macaulay of multiplicity 2."""
    amb = RingPresentation(QQ, ("x", "y"))
    x = amb.var("x")
    return amb.with_quotient([x ** 2])


@pytest.fixture
def ring_cusp():
    """k[x,y]/(y^2 - x^3), weighted so the relation is homogeneous."""
    amb = RingPresentation(QQ, ("x", "y"), weights=(2, 3))
    x, y = amb.gens()
    return amb.with_quotient([y ** 2 - x ** 3])

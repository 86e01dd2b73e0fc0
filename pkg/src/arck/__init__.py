"""arck: exact Groebner-basis machinery for Artin-Rees computations.

A library and CLI for deciding ideal-level Artin-Rees statements over QQ and
prime fields: instance checks and exhaustive tables for the strong identity
I^n ∩ J = I^(n-h)(I^h ∩ J), reduction elements and multiplicity in dimension
one, relation types of Rees algebras, the dimension-one a-priori uniform
bound, and two built-in dimension-two families where no uniform number
exists.
"""

from .artinrees import (ArReport, ExampleVerdict, ReltypeReport,
                        check_mixed_intersection, check_reltype_transfer,
                        check_strong_ar, check_weak_ar, find_ar_table,
                        find_reduction_element, h0_length, minimal_generators,
                        multiplicity, reltype, reltype_modulo,
                        uniform_ar_bound, verify_example1, verify_example2)
from .coeff import QQ, ModInt, PrimeField, RationalField
from .errors import (ArckError, BoundUnavailableError, ContractError,
                     InternalError, ResourceLimitError, SessionError,
                     StructureError)
from .groebner import (GroebnerBasis, buchberger, eliminate, get_degree_cap,
                       normal_form, s_polynomial, set_degree_cap)
from .ideals import Ideal, maximal_ideal, monomials_of_weighted_degree
from .orders import TermOrder, elimination_order, grevlex_order, lex_order
from .poly import Polynomial, RingPresentation
from .session import Session, parse_poly, parse_session, render_session

__version__ = "0.1.0"

__all__ = [
    "ArReport", "ArckError", "BoundUnavailableError", "ContractError",
    "ExampleVerdict", "GroebnerBasis", "Ideal", "InternalError", "ModInt",
    "Polynomial", "PrimeField", "QQ", "RationalField", "ReltypeReport",
    "ResourceLimitError", "RingPresentation", "Session", "SessionError",
    "StructureError", "TermOrder", "buchberger", "check_mixed_intersection",
    "check_reltype_transfer", "check_strong_ar", "check_weak_ar",
    "elimination_order", "eliminate", "find_ar_table",
    "find_reduction_element", "get_degree_cap", "grevlex_order", "h0_length",
    "lex_order", "maximal_ideal", "minimal_generators",
    "monomials_of_weighted_degree", "multiplicity", "normal_form",
    "parse_poly", "parse_session", "reltype", "reltype_modulo",
    "render_session", "s_polynomial", "set_degree_cap", "uniform_ar_bound",
    "verify_example1", "verify_example2",
]

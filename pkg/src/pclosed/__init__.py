"""Exact computation with derivations on polynomial rings in char p.

Foliation closures, algebraic solutions and first integrals, bases of
the solution quotient group, associated polynomials, and classes of
invertible ideals under Frobenius sandwiches, over small finite fields.
"""

__version__ = "0.1.0"

from .deriv import Derivation
from .field import FieldCtx, FqElem
from .foliation import Foliation, foliation_closure, foliation_of_subalgebra
from .poly import Poly, Ring, gcd, monomial_basis_leq
from .solutions import (
    LVector,
    PiBasis,
    enumerate_solutions,
    is_algebraic_solution,
    is_first_integral,
    l_map,
    pi_basis,
    pi_class,
    pi_dim_bound,
)

__all__ = [
    "Derivation",
    "FieldCtx",
    "FqElem",
    "Foliation",
    "LVector",
    "PiBasis",
    "Poly",
    "Ring",
    "__version__",
    "enumerate_solutions",
    "foliation_closure",
    "foliation_of_subalgebra",
    "gcd",
    "is_algebraic_solution",
    "is_first_integral",
    "l_map",
    "monomial_basis_leq",
    "pi_basis",
    "pi_class",
    "pi_dim_bound",
]

"""Classes of invertible ideals under a Frobenius sandwich A^p <= B <= A.

A B-ideal that becomes principal after extension to A determines a
class in the solution quotient group of the annihilating foliation: the
A-generator is automatically an algebraic solution, and scaling by a
unit (a constant, for a polynomial ring) does not move the class.  Only
integral ideals with generators given as elements of A (checked to lie
in B by annihilation) are accepted; that is enough to compute kernel
classes of the Picard pull-back at desk scale.
"""

from __future__ import annotations

from . import poly as polymod
from .foliation import Foliation
from .modgb import ModuleBasis, Vec
from .poly import Poly
from .solutions import PiBasis, pi_class


class PicardError(Exception):
    pass


class NotInB(PicardError):
    pass


class NotPrincipal(PicardError):
    pass


class SandwichProblem:
    """A subalgebra B (by generators, with A^p adjoined implicitly),
    its annihilating foliation and a solution-basis for that foliation."""

    def __init__(self, b_gens, foliation: Foliation, pi: PiBasis):
        self.b_gens = tuple(b_gens)
        self.foliation = foliation
        self.pi = pi
        for b in self.b_gens:
            for d in foliation.gens:
                if not d.apply(b).is_zero():
                    raise PicardError("foliation does not annihilate the subalgebra")


class FractionalIdeal:
    """An integral B-ideal given by generators in A."""

    def __init__(self, gens):
        gens = tuple(gens)
        if not gens or all(g.is_zero() for g in gens):
            raise PicardError("ideal needs a nonzero generator")
        self.gens = gens

    def product(self, other: "FractionalIdeal") -> "FractionalIdeal":
        return FractionalIdeal(
            [a * b for a in self.gens for b in other.gens]
        )


def _check_in_b(m: FractionalIdeal, fol: Foliation):
    # membership in B decided by annihilation, valid when B is the full
    # kernel of the foliation (normal case; user obligation otherwise)
    for g in m.gens:
        for d in fol.gens:
            if not d.apply(g).is_zero():
                raise NotInB(f"generator {g.render()} is not annihilated")


def extend_and_principalize(m: FractionalIdeal, fol: Foliation):
    """Generator of the extended ideal A.M when principal, else None.

    The gcd of the generators is the only candidate (A is a UFD); it
    generates iff it lies in the ideal, decided by Groebner membership.
    """
    _check_in_b(m, fol)
    ring = fol.ring
    g = ring.zero()
    for gen in m.gens:
        g = polymod.gcd(g, gen)
    basis = ModuleBasis([Vec([gen]) for gen in m.gens])
    if basis.member(Vec([g])) is None:
        return None
    return g


def theta(m: FractionalIdeal, prob: SandwichProblem):
    """F_p coordinate vector of the ideal's class in prob.pi.

    Well-defined up to the generator's unit ambiguity; units are
    constants here and contribute the zero class.
    """
    gen = extend_and_principalize(m, prob.foliation)
    if gen is None:
        raise NotPrincipal("extension to A is not principal")
    return pi_class(gen, prob.pi)


def theta_multiplicativity_check(
    m1: FractionalIdeal, m2: FractionalIdeal, prob: SandwichProblem
) -> bool:
    """class(M1 * M2) = class(M1) + class(M2) in F_p^s."""
    p = prob.foliation.ring.ctx.p
    c1 = theta(m1, prob)
    c2 = theta(m2, prob)
    c12 = theta(m1.product(m2), prob)
    return c12 == [(a + b) % p for a, b in zip(c1, c2)]

"""Shared fixtures: the example instances everything is checked against.

The suite instances are the two diagonal cases over F_2 and F_4 and the
degree-1 sandwich case; every cross-cutting invariant (structure checks,
rank equality, seed-vs-closure solution sets) runs over all of them.
"""

import random
from types import SimpleNamespace

import pytest

from pclosed.deriv import Derivation
from pclosed.field import FieldCtx
from pclosed.foliation import foliation_closure
from pclosed.poly import Poly, Ring, monomial_basis_leq


@pytest.fixture(scope="session")
def f2():
    return FieldCtx(2, 1)


@pytest.fixture(scope="session")
def f4():
    return FieldCtx(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def ring2(f2):
    return Ring(f2, ("x", "y"))


@pytest.fixture(scope="session")
def ring4(f4):
    return Ring(f4, ("x", "y"))


@pytest.fixture(scope="session")
def diag_t1(ring2):
    """Seed and closure for D = x*dx + y*dy over F_2."""
    x, y = ring2.var("x"), ring2.var("y")
    seed = [Derivation(ring2, [x, y])]
    return SimpleNamespace(ring=ring2, seed=seed, closure=foliation_closure(seed))


@pytest.fixture(scope="session")
def diag_tg(ring4):
    """Seed and closure for D = x*dx + g*y*dy over F_4 (g not in F_2)."""
    x, y = ring4.var("x"), ring4.var("y")
    g = ring4.const(ring4.ctx.gen())
    seed = [Derivation(ring4, [x, g * y])]
    return SimpleNamespace(ring=ring4, seed=seed, closure=foliation_closure(seed))


@pytest.fixture(scope="session")
def sandwich(ring2):
    """Seed and closure for D = x^2*dx + dy over F_2 (the sandwich case)."""
    x = ring2.var("x")
    one = ring2.one()
    seed = [Derivation(ring2, [x * x, one])]
    return SimpleNamespace(ring=ring2, seed=seed, closure=foliation_closure(seed))


@pytest.fixture(scope="session")
def suite(diag_t1, diag_tg, sandwich):
    """All suite instances: (name, seed derivations, closed foliation)."""
    return [
        ("diag_t1", diag_t1.seed, diag_t1.closure),
        ("diag_tg", diag_tg.seed, diag_tg.closure),
        ("sandwich", sandwich.seed, sandwich.closure),
    ]


def random_poly(rng: random.Random, ring: Ring, max_deg: int, density=0.4) -> Poly:
    monos = monomial_basis_leq(ring, max_deg)
    terms = {}
    for m in monos:
        if rng.random() < density:
            c = rng.choice(ring.ctx.elements)
            if c:
                terms[m] = c
    return Poly(ring, terms)


def random_nonzero_poly(rng, ring, max_deg, density=0.4) -> Poly:
    while True:
        f = random_poly(rng, ring, max_deg, density)
        if not f.is_zero():
            return f


def random_derivation(rng, ring, max_deg=2) -> Derivation:
    return Derivation(ring, [random_poly(rng, ring, max_deg) for _ in range(ring.n)])


def seed_view(seed):
    """A foliation-shaped view of a seed list, for the enumeration oracle."""
    return SimpleNamespace(ring=seed[0].ring, gens=list(seed))

"""Foliation closures, p-power matrices and subalgebra annihilators."""

import pytest

from pclosed.deriv import Derivation
from pclosed.field import FieldCtx
from pclosed.foliation import (
    IterationCap,
    NotClosed,
    foliation_closure,
    foliation_of_subalgebra,
    foliation_p_coeffs,
)
from pclosed.modgb import Vec, module_gb, module_equal
from pclosed.poly import Ring


@pytest.fixture(scope="module")
def r2():
    return Ring(FieldCtx(2, 1), ("x", "y"))


def test_closure_diagonal_t1(diag_t1):
    fol = diag_t1.closure
    assert fol.rank_gens() == 1
    assert fol.gens[0] == diag_t1.seed[0]


def test_closure_diagonal_tg(diag_tg, ring4):
    fol = diag_tg.closure
    x, y = ring4.var("x"), ring4.var("y")
    zero = ring4.zero()
    assert fol.rank_gens() == 2
    target = module_gb([Vec([x, zero]), Vec([zero, y])])
    assert module_equal(fol.basis, target)


def test_closure_sandwich(sandwich):
    fol = sandwich.closure
    assert fol.rank_gens() == 1
    assert fol.gens[0] == sandwich.seed[0]


def test_p_coeffs_sandwich(sandwich, r2):
    # D^2 = 0 so the matrix is the zero row
    assert foliation_p_coeffs(sandwich.closure) == ((r2.zero(),),)


def test_p_coeffs_diagonal_tg(diag_tg, ring4):
    rows = foliation_p_coeffs(diag_tg.closure)
    one, zero = ring4.one(), ring4.zero()
    assert rows == ((one, zero), (zero, one))


def test_p_coeffs_diagonal_t1(diag_t1, ring2):
    assert foliation_p_coeffs(diag_t1.closure) == ((ring2.one(),),)


def test_p_coeffs_recombine(suite):
    for name, _, fol in suite:
        for i, d in enumerate(fol.gens):
            entries = [fol.ring.zero()] * fol.ring.n
            for j, dj in enumerate(fol.gens):
                for k in range(fol.ring.n):
                    entries[k] = entries[k] + fol.p_coeffs[i][j] * dj.coeffs[k]
            assert Derivation(fol.ring, entries) == d.p_power(), name


def test_closure_idempotent(suite):
    for name, _, fol in suite:
        again = foliation_closure(list(fol.gens))
        assert fol.module_equals(again), name
        assert again.rank_gens() == fol.rank_gens(), name


def test_closure_certificate(suite):
    for name, _, fol in suite:
        assert fol.verify_certificate(), name
        for i, di in enumerate(fol.gens):
            assert fol.contains(di.p_power()), name
            for dj in fol.gens[i + 1 :]:
                assert fol.contains(di.bracket(dj)), name


def test_subalgebra_sandwich(sandwich, r2):
    x, y = r2.var("x"), r2.var("y")
    fol = foliation_of_subalgebra(r2, [x * x, y * y, x + x * x * y])
    assert fol.module_equals(sandwich.closure)


def test_subalgebra_of_pth_powers_is_everything(r2):
    x, y = r2.var("x"), r2.var("y")
    fol = foliation_of_subalgebra(r2, [x * x, y * y])
    one, zero = r2.one(), r2.zero()
    target = module_gb([Vec([one, zero]), Vec([zero, one])])
    assert module_equal(fol.basis, target)


def test_subalgebra_partial_kernel(r2):
    x, y = r2.var("x"), r2.var("y")
    fol = foliation_of_subalgebra(r2, [x * x, y])
    target = module_gb([Vec([r2.one(), r2.zero()])])
    assert module_equal(fol.basis, target)


def test_subalgebra_output_annihilates(sandwich, r2):
    x, y = r2.var("x"), r2.var("y")
    b_gens = [x * x, y * y, x + x * x * y]
    fol = foliation_of_subalgebra(r2, b_gens)
    for d in fol.gens:
        for b in b_gens:
            assert d.apply(b).is_zero()


def test_iteration_cap_is_loud(diag_tg):
    with pytest.raises(IterationCap):
        foliation_closure(diag_tg.seed, cap=0)


def test_p_coeffs_requires_closed(sandwich):
    fol = sandwich.closure
    fol_open = type(fol)(fol.ring, fol.gens, fol.basis, fol.p_coeffs, fol.seed)
    fol_open.closed = False
    with pytest.raises(NotClosed):
        foliation_p_coeffs(fol_open)

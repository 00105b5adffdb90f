"""Foliation closures in characteristic p.

A foliation is a sub-A-module of the derivations that is stable under
Lie bracket and under D -> D^p.  Closure of a seed set iterates:
compute the module Groebner basis, test every generator bracket and
p-th power for membership, adjoin the failures, and repeat.  The chain
of modules is ascending in a noetherian module, so this terminates; a
hard iteration cap turns a runaway into a loud error rather than a
silent truncation.

Generator-level checks suffice: a module whose generators satisfy the
bracket and p-power conditions is itself bracket-stable and p-closed
(products expand by Leibniz, p-th powers by Jacobson's formula into
module elements).
"""

from __future__ import annotations

from .deriv import Derivation
from .modgb import ModuleBasis, Vec, module_equal
from .poly import Poly, Ring, RingMismatch

ITERATION_CAP = 64


class FoliationError(Exception):
    pass


class IterationCap(FoliationError):
    pass


class NotClosed(FoliationError):
    pass


def _vec(d: Derivation) -> Vec:
    return Vec(d.coeffs)


class Foliation:
    """A closed foliation with canonical generators and p-power data.

    Attributes:
        gens: interreduced canonical generators (Derivation tuple).
        basis: ModuleBasis over A^n built on the canonical generators.
        p_coeffs: matrix with gens[i]^p = sum_j p_coeffs[i][j] * gens[j].
        seed: the derivations the closure started from.
    """

    def __init__(self, ring: Ring, gens, basis: ModuleBasis, p_coeffs, seed):
        self.ring = ring
        self.gens = tuple(gens)
        self.basis = basis
        self.p_coeffs = tuple(tuple(row) for row in p_coeffs)
        self.seed = tuple(seed)
        self.closed = True

    def contains(self, d: Derivation) -> bool:
        return self.basis.contains(_vec(d))

    def member(self, d: Derivation):
        return self.basis.member(_vec(d))

    def rank_gens(self) -> int:
        return len(self.gens)

    def module_equals(self, other: "Foliation") -> bool:
        return module_equal(self.basis, other.basis)

    def verify_certificate(self) -> bool:
        """Re-check brackets and p-powers of the canonical generators."""
        for i, di in enumerate(self.gens):
            if not self.contains(di.p_power()):
                return False
            for dj in self.gens[i + 1 :]:
                if not self.contains(di.bracket(dj)):
                    return False
        return True


def foliation_closure(seed, cap: int = ITERATION_CAP) -> Foliation:
    """Smallest foliation containing the seed derivations.

    Work-list order is brackets before p-powers, generator pairs in
    index order, so generator lists and p_coeffs are deterministic.
    """
    seed = list(seed)
    if not seed:
        raise FoliationError("closure needs at least one seed derivation")
    ring = seed[0].ring
    for d in seed:
        if d.ring != ring:
            raise RingMismatch("seed derivations from different rings")
    current = [d for d in seed if not d.is_zero()]
    basis = ModuleBasis([_vec(d) for d in current], m=ring.n, ring=ring)
    for _ in range(cap):
        missing = []

        def push(cand: Derivation):
            if cand.is_zero() or basis.contains(_vec(cand)):
                return
            if any(cand == m for m in missing):
                return
            missing.append(cand)

        for i, di in enumerate(current):
            for dj in current[i + 1 :]:
                push(di.bracket(dj))
        for di in current:
            push(di.p_power())
        if not missing:
            break
        current.extend(missing)
        basis = ModuleBasis([_vec(d) for d in current], m=ring.n, ring=ring)
    else:
        raise IterationCap(f"closure did not stabilize within {cap} rounds")

    return _finalize(ring, basis, seed)


def _finalize(ring: Ring, stable_basis: ModuleBasis, seed) -> Foliation:
    """Canonicalize generators and record the p-power representation."""
    gens = [Derivation(ring, g.entries) for g in stable_basis.gb]
    basis = ModuleBasis([_vec(d) for d in gens], m=ring.n, ring=ring)
    p_coeffs = []
    for d in gens:
        row = basis.member(_vec(d.p_power()))
        if row is None:
            raise NotClosed("p-power escaped the stabilized module")
        p_coeffs.append(row)
    fol = Foliation(ring, gens, basis, p_coeffs, seed)
    if not fol.verify_certificate():
        raise NotClosed("closure certificate failed")
    return fol


def foliation_p_coeffs(f: Foliation):
    """Rows a_{i,j} with gens[i]^p = sum_j a_{i,j} * gens[j]."""
    if not f.closed:
        raise NotClosed("foliation is not closed")
    return f.p_coeffs


def foliation_of_subalgebra(ring: Ring, b_gens) -> Foliation:
    """Maximal foliation annihilating the subalgebra generated by b_gens.

    Derivations kill p-th powers, so A^p-containment of the subalgebra
    is automatic.  The kernel of D -> (D(b_1),...,D(b_k)) is computed as
    the syzygy module of the Jacobian-style matrix; kernels of this form
    are bracket- and p-closed, and the certificate is verified rather
    than assumed.
    """
    from .modgb import module_kernel

    b_gens = [b if b.ring == ring else b.lift(ring) for b in b_gens]
    if not b_gens:
        raise FoliationError("need at least one subalgebra generator")
    rows = [
        Vec([b.partial(i) for b in b_gens]) for i in range(ring.n)
    ]
    syz = module_kernel(rows)
    if not syz:
        # zero foliation: no nonzero derivation annihilates the subalgebra
        basis = ModuleBasis([], m=ring.n, ring=ring)
        return Foliation(ring, [], basis, [], [])
    ders = [Derivation(ring, v.entries) for v in syz]
    fol = foliation_closure(ders)
    for d in fol.gens:
        for b in b_gens:
            if not d.apply(b).is_zero():
                raise FoliationError("kernel generator fails to annihilate input")
    return fol

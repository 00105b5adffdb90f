"""Groebner bases for submodules of A^m with representation tracking.

The module order is position-over-term: position 1 dominates, ties are
broken by grevlex on the monomials, so the ideal case (m = 1) behaves
exactly like a standard grevlex ideal.  Buchberger completion keeps a
transformation matrix expressing every basis element in the original
generators, because downstream consumers need explicit representation
coefficients, not just a membership bit.  Every successful membership
query re-verifies its recombination exactly.
"""

from __future__ import annotations

from collections import deque

from .poly import Poly, Ring, RingMismatch, grevlex_key


class ModError(Exception):
    pass


class Vec:
    """An element of A^m as a tuple of polynomials."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise ModError("vectors must have at least one entry")
        ring = entries[0].ring
        for e in entries[1:]:
            if e.ring != ring:
                raise RingMismatch("mixed rings in module vector")
        self.ring = ring
        self.entries = entries

    @property
    def m(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other):
        return Vec([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return Vec([a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, f) -> "Vec":
        return Vec([e * f for e in self.entries])

    def mul_term(self, coeff, exps) -> "Vec":
        return Vec([e.mul_term(coeff, exps) for e in self.entries])

    def lead(self):
        """Leading (position, monomial, coefficient) under POT-grevlex."""
        for pos, e in enumerate(self.entries):
            if not e.is_zero():
                lm = e.lead_monomial()
                return pos, lm, e.terms[lm]
        raise ModError("zero vector has no leading term")

    def lead_key(self):
        pos, lm, _ = self.lead()
        return (-pos, grevlex_key(lm))

    def __eq__(self, other):
        return isinstance(other, Vec) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def render(self) -> str:
        return "(" + ", ".join(e.render() for e in self.entries) + ")"

    def __repr__(self):
        return self.render()


def _divides(m1, m2) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _reduce(v: Vec, rep, basis, top_only: bool):
    """Reduce v by the (monic) basis, updating its representation row.

    The representation row is over whatever the basis rows' reps are
    over; reduction subtracts q * basis_rep for every reduction step.
    With top_only the loop stops at the first irreducible leading term
    (enough to decide membership); otherwise irreducible terms are moved
    to the remainder and reduction continues on the tail.
    """
    ring = v.ring
    remainder = Vec([ring.zero()] * v.m)
    work = v
    while not work.is_zero():
        pos, lm, lc = work.lead()
        reducer = None
        for g, g_rep in basis:
            gpos, glm, _ = g.lead()
            if gpos == pos and _divides(glm, lm):
                reducer = (g, g_rep, glm)
                break
        if reducer is None:
            if top_only:
                return work, rep, False
            g_term = ring.monomial(lm, lc)
            ent = list(remainder.entries)
            ent[pos] = ent[pos] + g_term
            remainder = Vec(ent)
            went = list(work.entries)
            went[pos] = went[pos] - g_term
            work = Vec(went)
            continue
        g, g_rep, glm = reducer
        diff = tuple(a - b for a, b in zip(lm, glm))
        work = work - g.mul_term(lc, diff)
        quot = ring.monomial(diff, lc)
        rep = [a - quot * b for a, b in zip(rep, g_rep)]
    if top_only:
        return work, rep, True
    return remainder, rep, remainder.is_zero()


class ModuleBasis:
    """Completed Groebner basis of an A-submodule of A^m.

    Attributes:
        gens: the original generators (as given).
        gb: interreduced monic Groebner generators, descending lead order.
        transform: transform[i] are coefficients over gens with
            gb[i] = sum_j transform[i][j] * gens[j], verified exactly.
    """

    def __init__(self, gens, m=None, ring: Ring | None = None):
        gens = list(gens)
        if gens:
            ring = gens[0].ring
            m = gens[0].m
            for g in gens:
                if g.ring != ring:
                    raise RingMismatch("mixed rings among generators")
                if g.m != m:
                    raise ModError("mixed ranks among generators")
        elif ring is None or m is None:
            raise ModError("empty generator list needs explicit ring and rank")
        self.ring = ring
        self.m = m
        self.gens = gens
        self._complete()

    def _complete(self):
        ring = self.ring
        zero = ring.zero()
        basis = []
        for idx, g in enumerate(self.gens):
            if g.is_zero():
                continue
            rep = [zero] * len(self.gens)
            _, _, lc = g.lead()
            inv = lc.inv()
            rep[idx] = ring.const(inv)
            basis.append((g.scale(ring.const(inv)), rep))

        pairs = deque(
            (i, j)
            for i in range(len(basis))
            for j in range(i + 1, len(basis))
            if basis[i][0].lead()[0] == basis[j][0].lead()[0]
        )
        while pairs:
            i, j = pairs.popleft()
            gi, ri = basis[i]
            gj, rj = basis[j]
            pos, lmi, _ = gi.lead()
            _, lmj, _ = gj.lead()
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
            one = ring.ctx.one()
            s = gi.mul_term(one, tuple(a - b for a, b in zip(lcm, lmi))) - gj.mul_term(
                one, tuple(a - b for a, b in zip(lcm, lmj))
            )
            srep = [
                ring.monomial(tuple(a - b for a, b in zip(lcm, lmi))) * a
                - ring.monomial(tuple(a - b for a, b in zip(lcm, lmj))) * b
                for a, b in zip(ri, rj)
            ]
            if s.is_zero():
                continue
            red, rrep, is_zero = _reduce(s, srep, basis, top_only=True)
            if is_zero:
                continue
            _, _, lc = red.lead()
            inv = ring.const(lc.inv())
            red = red.scale(inv)
            rrep = [a * inv for a in rrep]
            newpos = red.lead()[0]
            k = len(basis)
            basis.append((red, rrep))
            for t in range(k):
                if basis[t][0].lead()[0] == newpos:
                    pairs.append((t, k))

        # interreduce for canonical output, keeping reps in sync
        changed = True
        while changed:
            changed = False
            for i in range(len(basis)):
                g, rep = basis[i]
                others = basis[:i] + basis[i + 1 :]
                red, rrep, _ = _reduce(g, rep, others, top_only=False)
                if red.is_zero():
                    basis = others
                    changed = True
                    break
                _, _, lc = red.lead()
                inv = self.ring.const(lc.inv())
                red = red.scale(inv)
                rrep = [a * inv for a in rrep]
                if red != g:
                    basis[i] = (red, rrep)
                    changed = True

        basis.sort(key=lambda pair: pair[0].lead_key(), reverse=True)
        self.gb = [g for g, _ in basis]
        self.transform = [rep for _, rep in basis]
        for g, rep in zip(self.gb, self.transform):
            if self._combine(rep) != g:
                raise ModError("transform verification failed")

    def _combine(self, coeffs) -> Vec:
        out = Vec([self.ring.zero()] * self.m)
        for a, g in zip(coeffs, self.gens):
            if not a.is_zero():
                out = out + g.scale(a)
        return out

    def member(self, v: Vec):
        """Coefficients over the ORIGINAL generators, or None.

        On success the recombination sum(a_j * gens_j) = v is re-verified
        exactly before returning.
        """
        if v.ring != self.ring:
            raise RingMismatch("vector from a different ring")
        if v.m != self.m:
            raise ModError("vector of the wrong rank")
        zero = self.ring.zero()
        if v.is_zero():
            return [zero] * len(self.gens)
        quots = [zero] * len(self.gb)
        work = v
        while not work.is_zero():
            pos, lm, lc = work.lead()
            hit = None
            for i, g in enumerate(self.gb):
                gpos, glm, _ = g.lead()
                if gpos == pos and _divides(glm, lm):
                    hit = (i, glm)
                    break
            if hit is None:
                return None
            i, glm = hit
            diff = tuple(a - b for a, b in zip(lm, glm))
            work = work - self.gb[i].mul_term(lc, diff)
            quots[i] = quots[i] + self.ring.monomial(diff, lc)
        coeffs = [zero] * len(self.gens)
        for i, q in enumerate(quots):
            if q.is_zero():
                continue
            for j, t in enumerate(self.transform[i]):
                coeffs[j] = coeffs[j] + q * t
        if self._combine(coeffs) != v:
            raise ModError("membership recombination check failed")
        return coeffs

    def contains(self, v: Vec) -> bool:
        return self.member(v) is not None


def module_gb(gens, m=None, ring=None) -> ModuleBasis:
    return ModuleBasis(gens, m=m, ring=ring)


def module_member(v: Vec, basis: ModuleBasis):
    return basis.member(v)


def module_kernel(rows):
    """Syzygies of the map A^m -> A^k, x -> sum x_i * rows_i.

    Computed by completing the graph module {(rows_i | e_i)} in A^(k+m)
    under POT (the first k positions dominate) and projecting the basis
    elements whose first block vanishes.
    """
    rows = list(rows)
    if not rows:
        return []
    ring = rows[0].ring
    k = rows[0].m
    m = len(rows)
    zero = ring.zero()
    one = ring.one()
    aug = []
    for i, r in enumerate(rows):
        if r.ring != ring or r.m != k:
            raise ModError("inconsistent rows")
        unit = [zero] * m
        unit[i] = one
        aug.append(Vec(list(r.entries) + unit))
    basis = ModuleBasis(aug)
    syz = []
    for g in basis.gb:
        if all(e.is_zero() for e in g.entries[:k]):
            syz.append(Vec(g.entries[k:]))
    return syz


def module_equal(a: ModuleBasis, b: ModuleBasis) -> bool:
    """True iff the two submodules coincide (mutual membership)."""
    if a.ring != b.ring or a.m != b.m:
        raise ModError("bases over different ambient modules")
    return all(b.contains(g) for g in a.gb) and all(a.contains(g) for g in b.gb)

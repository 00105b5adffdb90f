"""Algebraic solutions, first integrals, the L-map and quotient-group bases.

The quotient of algebraic solutions modulo first integrals is an
F_p-vector space represented here by basis representatives f_1..f_s
whose L-vectors (D_1(f)/f, ..., D_n(f)/f) are F_q-linearly independent;
class arithmetic is coordinate arithmetic in F_p^s.  Enumeration of
solutions up to a degree bound is the brute-force oracle everything
else is checked against; it is complete only relative to the searched
degree, so callers report a lower bound plus the dimension estimate
from the generator degrees.
"""

from __future__ import annotations

import itertools

from . import linalg
from .field import FqElem
from .foliation import Foliation, NotClosed
from .poly import NEG_INF, Poly, Ring, grevlex_key, monomial_basis_leq

DEFAULT_BUDGET = 2**22


class SolutionError(Exception):
    pass


class ZeroInput(SolutionError):
    pass


class NotSolution(SolutionError):
    def __init__(self, f=None):
        self.f = f
        super().__init__(
            "not an algebraic solution" + (f" : {f.render()}" if f is not None else "")
        )


class BudgetExceeded(SolutionError):
    pass


class NotInSpan(SolutionError):
    pass


class NonPrimeCoords(SolutionError):
    """A solvable class has a coordinate outside F_p.

    This signals that the basis is not maximal over the ground field;
    against a maximal basis it cannot occur.
    """

    def __init__(self, coords):
        self.coords = coords
        super().__init__(f"coordinates outside the prime field: {coords}")


class LVector:
    """The tuple (D_1(f)/f, ..., D_n(f)/f) of a solution f."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other):
        return LVector([a + b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        return isinstance(other, LVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def render(self) -> str:
        return "(" + ", ".join(e.render() for e in self.entries) + ")"

    def __repr__(self):
        return self.render()


class PiBasis:
    """Solution representatives with F_q-independent L-vectors."""

    def __init__(self, reps, lvecs, foliation: Foliation):
        self.reps = tuple(reps)
        self.lvecs = tuple(lvecs)
        self.foliation = foliation

    @property
    def dim(self) -> int:
        return len(self.reps)


def is_first_integral(f: Poly, fol: Foliation) -> bool:
    """True iff every foliation generator annihilates f."""
    if f.is_zero():
        raise ZeroInput("the zero polynomial is not a first integral")
    return all(d.apply(f).is_zero() for d in fol.gens)


def is_algebraic_solution(f: Poly, fol: Foliation):
    """The LVector when every D_i(f) is exactly divisible by f, else None."""
    if f.is_zero():
        raise ZeroInput("the zero polynomial is not an algebraic solution")
    entries = []
    for d in fol.gens:
        q = d.apply(f).divexact(f)
        if q is None:
            return None
        entries.append(q)
    return LVector(entries)


def l_map(f: Poly, fol: Foliation) -> LVector:
    """f -> (D_1(f)/f, ..., D_n(f)/f); raises NotSolution if undefined."""
    lv = is_algebraic_solution(f, fol)
    if lv is None:
        raise NotSolution(f)
    return lv


def _neg_grevlex(m):
    total, rest = grevlex_key(m)
    return (-total, tuple(-x for x in rest))


def solution_sort_key(f: Poly):
    """Canonical solution order: degree, then grevlex-larger lead first."""
    return (f.degree(), _neg_grevlex(f.lead_monomial()), f.render())


def _div_check(num: dict, f_terms: dict, f_lm, zero) -> bool:
    """True iff the monic polynomial with terms f_terms divides num exactly.

    num maps monomials to nonzero coefficients and is consumed.
    """
    while num:
        lm = max(num, key=grevlex_key)
        diff = tuple(a - b for a, b in zip(lm, f_lm))
        if any(d < 0 for d in diff):
            return False
        c = num[lm]
        for m, fc in f_terms.items():
            key = tuple(a + b for a, b in zip(m, diff))
            s = num.get(key, zero) - c * fc
            if s:
                num[key] = s
            else:
                num.pop(key, None)
    return True


def _lambda_monos(ring: Ring, d):
    """Monomials a quotient D(f)/f can involve: degree at most deg D."""
    deg = d.degree()
    if deg == NEG_INF or int(deg) < 0:
        return []
    return monomial_basis_leq(ring, int(deg))


def _projective_span(basis, ctx):
    """One representative per line of the span: first nonzero coord 1."""
    k = len(basis)
    for i in range(k):
        for rest in itertools.product(ctx.elements, repeat=k - i - 1):
            vec = list(basis[i])
            for t, c in enumerate(rest):
                if c:
                    row = basis[i + 1 + t]
                    vec = [a + c * b for a, b in zip(vec, row)]
            yield vec


def _solutions_of_gen(d, monos, ring, ctx):
    """Normalized f with deg f <= bound and D(f) = lambda * f for some lambda.

    deg(D(f)) <= deg f + deg D, so the quotient lambda ranges over the
    polynomials of degree at most deg D; for each lambda the condition
    on f is F_q-linear and the solutions form the kernel of a matrix.
    """
    lam_monos = _lambda_monos(ring, d)
    imgs = [d.apply(ring.monomial(m)) for m in monos]
    zero = ctx.zero()
    out = []
    for lam_coeffs in itertools.product(ctx.elements, repeat=len(lam_monos)):
        lam = Poly(ring, {m: c for m, c in zip(lam_monos, lam_coeffs) if c})
        cols = []
        row_monos = set()
        for j, m in enumerate(monos):
            colp = imgs[j] - lam * ring.monomial(m)
            cols.append(colp.terms)
            row_monos.update(colp.terms)
        row_list = sorted(row_monos, key=grevlex_key)
        rows = [[cols[j].get(rm, zero) for j in range(len(monos))] for rm in row_list]
        ker = linalg.kernel(rows, len(monos), ctx)
        for v in _projective_span(ker, ctx):
            terms = {monos[j]: c for j, c in enumerate(v) if c}
            if terms:
                out.append(Poly(ring, terms).monic())
    return out


def enumerate_solutions(fol: Foliation, max_deg: int, budget: int = DEFAULT_BUDGET):
    """All normalized algebraic solutions of degree <= max_deg.

    Candidates run over nonzero polynomials with leading grevlex
    coefficient 1; the output is in canonical solution order (see
    solution_sort_key), which is deterministic.  The search solves the
    linear eigen-systems of the generator with the smallest quotient
    space, then filters by exact divisibility for the remaining
    generators; a depth-first coefficient walk is the fallback when
    every generator's quotient space outgrows the budget.
    """
    ring = fol.ring
    ctx = ring.ctx
    monos = monomial_basis_leq(ring, max_deg)
    n_monos = len(monos)
    if ctx.q**n_monos > budget:
        raise BudgetExceeded(
            f"q^l(d) = {ctx.q}^{n_monos} exceeds the budget {budget}"
        )
    sizes = [ctx.q ** len(_lambda_monos(ring, d)) for d in fol.gens]
    pivot = min(range(len(fol.gens)), key=lambda i: sizes[i])
    if sizes[pivot] > budget:
        return _enumerate_bruteforce(fol, monos, budget)
    out = []
    for f in _solutions_of_gen(fol.gens[pivot], monos, ring, ctx):
        if is_algebraic_solution(f, fol) is not None:
            out.append(f)
    out.sort(key=solution_sort_key)
    return out


def _enumerate_bruteforce(fol: Foliation, monos, budget: int):
    """Depth-first walk over coefficient vectors with incremental images."""
    ring = fol.ring
    ctx = ring.ctx
    n_monos = len(monos)
    one = ctx.one()
    zero = ctx.zero()
    gens = fol.gens
    n_gens = len(gens)

    # sparse image of each basis monomial under each generator, indexed
    # densely over the union of monomials those images involve
    images_poly = [[d.apply(ring.monomial(m)) for m in monos] for d in gens]
    image_monos = sorted(
        {m for row in images_poly for p in row for m in p.terms}, key=grevlex_key
    )
    pos_of = {m: i for i, m in enumerate(image_monos)}
    images = [
        [[(pos_of[m], c) for m, c in p.terms.items()] for p in row]
        for row in images_poly
    ]
    n_pos = len(image_monos)

    elements = ctx.elements
    out = []
    acc = [[zero] * n_pos for _ in range(n_gens)]
    combo = [zero] * n_monos

    def add_image(j, c):
        for gi in range(n_gens):
            row = acc[gi]
            for pos, cc in images[gi][j]:
                row[pos] = row[pos] + c * cc

    def test(lead):
        f_terms = {monos[j]: combo[j] for j in range(lead) if combo[j]}
        f_terms[monos[lead]] = one
        f_lm = monos[lead]
        for gi in range(n_gens):
            row = acc[gi]
            num = {}
            for pos in range(n_pos):
                c = row[pos]
                if c:
                    num[image_monos[pos]] = c
            if num and not _div_check(num, f_terms, f_lm, zero):
                return
        out.append(Poly(ring, dict(f_terms)))

    def dfs(j, lead):
        if j == lead:
            test(lead)
            return
        dfs(j + 1, lead)  # coefficient zero
        for c in elements[1:]:
            combo[j] = c
            add_image(j, c)
            dfs(j + 1, lead)
            add_image(j, -c)
        combo[j] = zero

    for lead in range(n_monos):
        add_image(lead, one)
        dfs(0, lead)
        add_image(lead, -one)

    out.sort(key=solution_sort_key)
    return out


def _flat_keys(lvecs):
    keys = set()
    for lv in lvecs:
        for i, e in enumerate(lv.entries):
            for m in e.terms:
                keys.add((i, m))
    return sorted(keys, key=lambda k: (k[0], grevlex_key(k[1])))


def _flatten(lv: LVector, keys, ctx):
    zero = ctx.zero()
    return [lv.entries[i].terms.get(m, zero) for (i, m) in keys]


class _SpanTracker:
    """Incremental F_q-independence test on sparse coefficient vectors."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.pivots = {}  # pivot key -> reduced row (dict key -> FqElem)

    @staticmethod
    def _to_dict(lv: LVector):
        d = {}
        for i, e in enumerate(lv.entries):
            for m, c in e.terms.items():
                d[(i, m)] = c
        return d

    @staticmethod
    def _key_order(k):
        return (k[0], grevlex_key(k[1]))

    def reduces_to_zero(self, lv: LVector) -> bool:
        """Reduce against kept rows; keep the row if independent."""
        row = self._to_dict(lv)
        while row:
            key = min(row, key=self._key_order)
            piv = self.pivots.get(key)
            if piv is None:
                c_inv = row[key].inv()
                self.pivots[key] = {k: v * c_inv for k, v in row.items()}
                return False
            factor = row[key]
            for k, v in piv.items():
                s = row.get(k, self.ctx.zero()) - factor * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return True


def pi_basis(fol: Foliation, candidates) -> PiBasis:
    """Greedy scan keeping candidates with F_q-independent L-vectors.

    Every candidate is re-verified to be an algebraic solution; the
    result is an F_p-basis of the span of the candidates' classes.
    """
    tracker = _SpanTracker(fol.ring.ctx)
    reps, lvecs = [], []
    for f in candidates:
        lv = is_algebraic_solution(f, fol)
        if lv is None:
            raise NotSolution(f)
        if not tracker.reduces_to_zero(lv):
            reps.append(f)
            lvecs.append(lv)
    return PiBasis(reps, lvecs, fol)


def pi_class(f: Poly, basis: PiBasis):
    """F_p coordinates of [f] in the basis.

    Solves L(f) = sum z_a L(f_a) over F_q; raises NotInSpan when
    unsolvable and NonPrimeCoords when a coordinate leaves F_p.
    """
    fol = basis.foliation
    lv = l_map(f, fol)
    ctx = fol.ring.ctx
    if basis.dim == 0:
        if lv.is_zero():
            return []
        raise NotInSpan("nonzero class against an empty basis")
    keys = _flat_keys(list(basis.lvecs) + [lv])
    cols = [_flatten(b, keys, ctx) for b in basis.lvecs]
    target = _flatten(lv, keys, ctx)
    z = linalg.solve(cols, target, ctx)
    if z is None:
        raise NotInSpan("L-vector outside the span of the basis")
    if not all(c.in_prime_field() for c in z):
        raise NonPrimeCoords(z)
    return [c.as_int() for c in z]


def dim_leq(ring: Ring, d) -> int:
    """l(d): dimension of the degree-<= d ball in A; l(-inf) = 0."""
    if d == NEG_INF:
        return 0
    return len(monomial_basis_leq(ring, int(d)))


def pi_dim_bound(fol: Foliation) -> int:
    """Upper bound sum_i l(deg D_i) over the canonical generators."""
    if not fol.closed:
        raise NotClosed("foliation is not closed")
    return sum(dim_leq(fol.ring, d.degree()) for d in fol.gens)


def l_image_ranks(lvecs, ctx):
    """(F_p-rank, F_q-rank) of a collection of L-vectors."""
    if not lvecs:
        return 0, 0
    keys = _flat_keys(lvecs)
    rows = [_flatten(lv, keys, ctx) for lv in lvecs]
    return linalg.rank_fp(rows, ctx), linalg.rank(rows, ctx)

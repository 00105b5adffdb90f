"""Sparse multivariate polynomials over F_q.

A Ring carries the coefficient field, the ring variables x_1..x_n (with
optional positive weights for the degree function) and auxiliary
variables t_1..t_s.  The auxiliary variables share the same Poly type:
the structural operators of the theory mix ring and t-arithmetic
constantly, and a single type avoids conversion layers.  The weighted
degree counts ring variables only.

Terms are a dict mapping exponent tuples (length n + s) to nonzero field
elements.  The canonical term order is graded reverse lexicographic over
all variables; rendering lists terms in descending grevlex order, which
is the golden-file format.
"""

from __future__ import annotations

import itertools

from .field import FieldCtx, FqElem

NEG_INF = float("-inf")


class PolyError(Exception):
    pass


class RingMismatch(PolyError):
    pass


class AuxVarsPresent(PolyError):
    pass


class LengthMismatch(PolyError):
    pass


class DivisionByZeroPoly(PolyError):
    pass


def grevlex_key(exps):
    """Sort key: larger key = larger monomial in grevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Ring:
    """Polynomial ring F_q[x_1..x_n][t_1..t_s]."""

    def __init__(self, ctx: FieldCtx, ring_vars, aux_vars=(), weights=None):
        ring_vars = tuple(ring_vars)
        aux_vars = tuple(aux_vars)
        if len(ring_vars) < 1:
            raise PolyError("need at least one ring variable")
        names = ring_vars + aux_vars
        if len(set(names)) != len(names):
            raise PolyError("variable names must be distinct")
        if weights is None:
            weights = (1,) * len(ring_vars)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(ring_vars) or any(w < 1 for w in weights):
            raise PolyError("weights must be positive, one per ring variable")
        self.ctx = ctx
        self.ring_vars = ring_vars
        self.aux_vars = aux_vars
        self.weights = weights
        self.n = len(ring_vars)
        self.s = len(aux_vars)
        self.nvars = self.n + self.s

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.ctx == other.ctx
            and self.ring_vars == other.ring_vars
            and self.aux_vars == other.aux_vars
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.ctx, self.ring_vars, self.aux_vars, self.weights))

    def __repr__(self):
        aux = f", aux={list(self.aux_vars)}" if self.aux_vars else ""
        return f"Ring(F_{self.ctx.q}[{', '.join(self.ring_vars)}]{aux})"

    # -- constructors --

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.ctx.element(c)
        if c.is_zero():
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        names = self.ring_vars + self.aux_vars
        if name not in names:
            raise PolyError(f"unknown variable {name!r}")
        exps = [0] * self.nvars
        exps[names.index(name)] = 1
        return Poly(self, {tuple(exps): self.ctx.one()})

    def monomial(self, exps, coeff=1) -> "Poly":
        c = self.ctx.element(coeff)
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise PolyError("bad exponent vector")
        if c.is_zero():
            return self.zero()
        return Poly(self, {exps: c})

    def with_aux(self, s: int) -> "Ring":
        """Same ring variables, s fresh auxiliary variables t1..ts."""
        taken = set(self.ring_vars)
        aux = []
        i = 1
        while len(aux) < s:
            name = f"t{i}"
            while name in taken:
                name = "t" + name
            aux.append(name)
            taken.add(name)
            i += 1
        return Ring(self.ctx, self.ring_vars, aux, self.weights)

    def base_ring(self) -> "Ring":
        """The ring without auxiliary variables."""
        if not self.aux_vars:
            return self
        return Ring(self.ctx, self.ring_vars, (), self.weights)

    def mono_weighted_degree(self, exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps[: self.n]))


class Poly:
    """Immutable sparse polynomial; no zero coefficients stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    # -- predicates and leading data --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def lead_monomial(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def lead_coeff(self) -> FqElem:
        return self.terms[self.lead_monomial()]

    def constant_coeff(self) -> FqElem:
        return self.terms.get((0,) * self.ring.nvars, self.ring.ctx.zero())

    def has_aux(self) -> bool:
        n = self.ring.n
        return any(any(m[n:]) for m in self.terms)

    # -- arithmetic --

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, FqElem)):
            other = self.ring.const(other)
        self._check(other)
        terms = dict(self.terms)
        zero = self.ring.ctx.zero()
        for m, c in other.terms.items():
            s = terms.get(m, zero) + c
            if s.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = s
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FqElem)):
            other = self.ring.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, FqElem)):
            c = self.ring.ctx.element(other)
            if c.is_zero():
                return self.ring.zero()
            return Poly(self.ring, {m: co * c for m, co in self.terms.items()})
        self._check(other)
        terms = {}
        zero = self.ring.ctx.zero()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, zero) + c1 * c2
                if s.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def mul_term(self, coeff: FqElem, exps) -> "Poly":
        """Multiply by a single term coeff * x^exps."""
        if coeff.is_zero():
            return self.ring.zero()
        return Poly(
            self.ring,
            {
                tuple(a + b for a, b in zip(m, exps)): c * coeff
                for m, c in self.terms.items()
            },
        )

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def divexact(self, g: "Poly"):
        """Exact quotient self / g, or None when g does not divide self."""
        self._check(g)
        if g.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        lm_g = g.lead_monomial()
        lc_g_inv = g.terms[lm_g].inv()
        q_terms = {}
        r = self
        while r.terms:
            lm_r = r.lead_monomial()
            diff = tuple(a - b for a, b in zip(lm_r, lm_g))
            if any(d < 0 for d in diff):
                return None
            c = r.terms[lm_r] * lc_g_inv
            q_terms[diff] = c
            r = r - g.mul_term(c, diff)
        return Poly(self.ring, q_terms)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lead_coeff().inv()

    # -- degrees --

    def degree(self):
        """Weighted total degree in ring variables; -inf for zero."""
        if not self.terms:
            return NEG_INF
        return max(self.ring.mono_weighted_degree(m) for m in self.terms)

    def t_degree(self):
        """Total degree in auxiliary variables; -inf for zero."""
        if not self.terms:
            return NEG_INF
        n = self.ring.n
        return max(sum(m[n:]) for m in self.terms)

    # -- aux-variable plumbing --

    def eval_aux(self, point) -> "Poly":
        """Substitute t_alpha := point[alpha]; result has no aux exponents."""
        ring = self.ring
        point = [ring.ctx.element(z) for z in point]
        if len(point) != ring.s:
            raise LengthMismatch(f"expected {ring.s} values, got {len(point)}")
        n = ring.n
        terms = {}
        zero = ring.ctx.zero()
        for m, c in self.terms.items():
            for z, e in zip(point, m[n:]):
                c = c * z**e
            key = m[:n] + (0,) * ring.s
            s = terms.get(key, zero) + c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return Poly(ring, terms)

    def lift(self, ring: Ring) -> "Poly":
        """Reinterpret in a ring with the same ring variables and more aux."""
        if ring.ctx != self.ring.ctx or ring.ring_vars != self.ring.ring_vars:
            raise RingMismatch("lift target must share ring variables")
        pad = ring.nvars - self.ring.nvars
        if pad < 0 or ring.aux_vars[: self.ring.s] != self.ring.aux_vars:
            raise RingMismatch("lift target must extend the aux variables")
        return Poly(ring, {m + (0,) * pad: c for m, c in self.terms.items()})

    def drop_aux(self) -> "Poly":
        """Project to the aux-free ring; aux exponents must all be zero."""
        if self.has_aux():
            raise AuxVarsPresent("polynomial involves auxiliary variables")
        base = self.ring.base_ring()
        n = base.n
        return Poly(base, {m[:n]: c for m, c in self.terms.items()})

    def partial(self, i: int) -> "Poly":
        """Partial derivative in the i-th ring variable (char p semantics)."""
        ring = self.ring
        p = ring.ctx.p
        terms = {}
        zero = ring.ctx.zero()
        for m, c in self.terms.items():
            e = m[i]
            if e % p == 0:
                continue
            key = m[:i] + (e - 1,) + m[i + 1 :]
            s = terms.get(key, zero) + c * ring.ctx.from_int(e)
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return Poly(ring, terms)

    # -- comparison and rendering --

    def __eq__(self, other):
        if isinstance(other, (int, FqElem)):
            other = self.ring.const(other)
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def render(self) -> str:
        """Canonical text: descending grevlex, `*` and `^` explicit."""
        if not self.terms:
            return "0"
        names = self.ring.ring_vars + self.ring.aux_vars
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = c.render()
            if not factors:
                parts.append(f"({cs})" if "+" in cs else cs)
            elif c.is_one():
                parts.append("*".join(factors))
            else:
                head = f"({cs})" if "+" in cs or "*" in cs else cs
                parts.append(head + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


# --- gcd over the ring variables (A is a UFD) ---


def _vars_present(f: Poly, g: Poly):
    present = set()
    for poly in (f, g):
        for m in poly.terms:
            for i, e in enumerate(m):
                if e:
                    present.add(i)
    return present


def _coeffs_in_var(f: Poly, k: int):
    """Decompose f by powers of variable k: degree -> Poly coefficient."""
    out = {}
    for m, c in f.terms.items():
        e = m[k]
        key = m[:k] + (0,) + m[k + 1 :]
        coeff = out.setdefault(e, {})
        coeff[key] = coeff.get(key, f.ring.ctx.zero()) + c
    return {e: Poly(f.ring, t) for e, t in out.items() if any(t.values())}


def _deg_in_var(f: Poly, k: int) -> int:
    return max((m[k] for m in f.terms), default=-1)


def _content(f: Poly, k: int) -> Poly:
    cont = f.ring.zero()
    for coeff in _coeffs_in_var(f, k).values():
        cont = _gcd_rec(cont, coeff)
    return cont


def _prem(f: Poly, g: Poly, k: int) -> Poly:
    """Pseudo-remainder of f by g with respect to variable k."""
    dg = _deg_in_var(g, k)
    lc_g = _coeffs_in_var(g, k)[dg]
    r = f
    while not r.is_zero() and _deg_in_var(r, k) >= dg:
        dr = _deg_in_var(r, k)
        lc_r = _coeffs_in_var(r, k)[dr]
        shift = [0] * f.ring.nvars
        shift[k] = dr - dg
        xk = f.ring.monomial(tuple(shift))
        r = lc_g * r - lc_r * xk * g
    return r


def _gcd_rec(f: Poly, g: Poly) -> Poly:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    present = _vars_present(f, g)
    if not present:
        return f.ring.one()
    k = max(present)
    cont_f = _content(f, k)
    cont_g = _content(g, k)
    cont = _gcd_rec(cont_f, cont_g)
    fp = f.divexact(cont_f)
    gp = g.divexact(cont_g)
    if _deg_in_var(fp, k) < _deg_in_var(gp, k):
        fp, gp = gp, fp
    while not gp.is_zero():
        r = _prem(fp, gp, k)
        fp = gp
        if r.is_zero():
            gp = r
        else:
            gp = r.divexact(_content(r, k))
    # fp is primitive in x_k up to content in the lower variables
    fp = fp.divexact(_content(fp, k))
    return cont * fp


def gcd(f: Poly, g: Poly) -> Poly:
    """A gcd in A = F_q[x_1..x_n], monic in the leading grevlex coefficient.

    Only ring variables are allowed; gcd(f, 0) is the normalized f.
    """
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    if f.has_aux() or g.has_aux():
        raise AuxVarsPresent("gcd is defined over ring variables only")
    return _gcd_rec(f, g).monic()


def monomial_basis_leq(ring: Ring, d: int):
    """All ring-variable monomials of weighted degree <= d, ascending grevlex.

    Returns full-length exponent tuples (aux exponents zero); the length
    of the list is l(d).  Negative d gives the empty list (l of a
    negative or -inf degree is zero).
    """
    if d < 0:
        return []
    monos = []

    def rec(i, prefix, remaining):
        if i == ring.n:
            monos.append(tuple(prefix) + (0,) * ring.s)
            return
        w = ring.weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, prefix + [e], remaining - w * e)

    rec(0, [], int(d))
    monos.sort(key=grevlex_key)
    return monos

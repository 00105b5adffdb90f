"""Exact arithmetic in small finite fields F_{p^r}.

Elements are represented by their coefficient tuple in the power basis
1, g, ..., g^{r-1} of a fixed monic irreducible modulus over F_p.
Multiplication and inversion go through discrete log/antilog tables built
once per context, so element operations are table lookups plus tuple
arithmetic.  Contexts are capped at desk scale (p <= 7, r <= 4) so that
exhaustive field-level checks stay trivial.
"""

from __future__ import annotations

import itertools


MAX_P = 7
MAX_R = 4


class FieldError(Exception):
    pass


class NonPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- F_p[X] helpers on little-endian int tuples (used only at setup) ---

def _fpx_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _fpx_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _fpx_trim(tuple(out))


def _fpx_mod(a, m, p):
    """Remainder of a modulo monic m over F_p."""
    a = list(a)
    dm = len(m) - 1
    while len(_fpx_trim(tuple(a))) - 1 >= dm and any(a):
        a = list(_fpx_trim(tuple(a)))
        da = len(a) - 1
        if da < dm:
            break
        c = a[da]
        for j in range(dm + 1):
            a[da - dm + j] = (a[da - dm + j] - c * m[j]) % p
    return _fpx_trim(tuple(a))


def _is_irreducible(modulus, p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..r//2."""
    r = len(modulus) - 1
    if r == 1:
        return True
    for d in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = tuple(low) + (1,)
            if not _fpx_mod(modulus, div, p):
                return False
    return True


def default_modulus(p: int, r: int):
    """Lexicographically smallest monic irreducible of degree r over F_p.

    Deterministic, so element representations are reproducible across
    runs.  For instance (2, 2) yields g^2 + g + 1.
    """
    if r == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=r):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible modulus of degree {r} over F_{p}")


class FieldCtx:
    """The coefficient field F_{p^r}, immutable after construction."""

    def __init__(self, p: int, r: int, modulus=None):
        if not _is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if r < 1:
            raise FieldError("extension degree must be >= 1")
        if p > MAX_P or r > MAX_R:
            raise FieldError(f"desk-scale cap exceeded (p <= {MAX_P}, r <= {MAX_R})")
        if modulus is None:
            modulus = default_modulus(p, r)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[r] != 1:
            raise FieldError(f"modulus must be monic of degree {r}")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.r = r
        self.modulus = modulus
        self.q = p ** r
        self._build_tables()

    def _raw_mul(self, a, b):
        prod = _fpx_mul(a, b, self.p)
        red = _fpx_mod(prod, self.modulus, self.p)
        return red + (0,) * (self.r - len(red))

    def _build_tables(self):
        p, r = self.p, self.r
        self.elements = tuple(
            FqElem(self, c) for c in itertools.product(range(p), repeat=r)
        )
        one = (1,) + (0,) * (r - 1)
        # Find a multiplicative generator and fill log/antilog tables.
        order_needed = self.q - 1
        for cand in self.elements:
            if cand.is_zero():
                continue
            cur = cand.coeffs
            seen = [cand.coeffs]
            while cur != one:
                cur = self._raw_mul(cur, cand.coeffs)
                seen.append(cur)
            if len(seen) == order_needed:
                self._exp = [one] + seen[:-1]
                break
        self._log = {c: k for k, c in enumerate(self._exp)}
        self._index = {e.coeffs: e for e in self.elements}

    # -- element constructors --

    def zero(self) -> "FqElem":
        return self.elements[0]

    def one(self) -> "FqElem":
        return self._index[(1,) + (0,) * (self.r - 1)]

    def gen(self) -> "FqElem":
        if self.r == 1:
            raise FieldError("prime field has no extension generator")
        return self._index[(0, 1) + (0,) * (self.r - 2)]

    def from_int(self, n: int) -> "FqElem":
        return self._index[(n % self.p,) + (0,) * (self.r - 1)]

    def from_coeffs(self, coeffs) -> "FqElem":
        c = tuple(int(x) % self.p for x in coeffs)
        if len(c) != self.r:
            raise FieldError(f"expected {self.r} coefficients")
        return self._index[c]

    def element(self, v) -> "FqElem":
        if isinstance(v, FqElem):
            if v.ctx != self:
                raise FieldError("element from a different field context")
            return v
        if isinstance(v, int):
            return self.from_int(v)
        return self.from_coeffs(v)

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r}, q={self.q})"


class FqElem:
    """An element of F_{p^r}, canonical coefficient tuple over F_p."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self.ctx.element(other)
        p = self.ctx.p
        return self.ctx._index[
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        ]

    def __sub__(self, other):
        other = self.ctx.element(other)
        p = self.ctx.p
        return self.ctx._index[
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        ]

    def __neg__(self):
        p = self.ctx.p
        return self.ctx._index[tuple((-a) % p for a in self.coeffs)]

    def __mul__(self, other):
        other = self.ctx.element(other)
        if self.is_zero() or other.is_zero():
            return self.ctx.zero()
        ctx = self.ctx
        k = (ctx._log[self.coeffs] + ctx._log[other.coeffs]) % (ctx.q - 1)
        return ctx._index[ctx._exp[k]]

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int):
        ctx = self.ctx
        if self.is_zero():
            if n == 0:
                return ctx.one()
            if n < 0:
                raise DivisionByZero("0 has no negative powers")
            return ctx.zero()
        k = (ctx._log[self.coeffs] * n) % (ctx.q - 1)
        return ctx._index[ctx._exp[k]]

    def inv(self) -> "FqElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        return self * self.ctx.element(other).inv()

    def frobenius(self) -> "FqElem":
        """The p-power map a -> a^p."""
        return self ** self.ctx.p

    def pth_root(self) -> "FqElem":
        """The unique b with b^p = a (Frobenius is bijective)."""
        return self ** (self.ctx.p ** (self.ctx.r - 1))

    def in_prime_field(self) -> bool:
        """a in F_p iff a^p = a."""
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        """Residue in [0, p) for prime-subfield elements."""
        if not self.in_prime_field():
            raise FieldError("element is not in the prime subfield")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        return (
            isinstance(other, FqElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def render(self) -> str:
        """Canonical text: integer for prime-subfield values, g^k sums else."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.ctx.r - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("g" if c == 1 else f"{c}*g")
            else:
                parts.append(f"g^{k}" if c == 1 else f"{c}*g^{k}")
        return "+".join(parts)

    def __repr__(self):
        return self.render()

"""k-derivations on A = F_q[x_1..x_n].

A derivation is stored extensionally by its images on the ring
generators; application recomputes through partial derivatives, which
matches the A-module structure the Groebner layer works with.
Auxiliary variables are treated as constants (D(t_alpha) = 0).
"""

from __future__ import annotations

from .poly import NEG_INF, Poly, Ring, RingMismatch


class Derivation:
    """Sum of coeffs[i] * d/dx_i; determined by its generator images."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.n:
            raise RingMismatch(
                f"expected {ring.n} coefficient polynomials, got {len(coeffs)}"
            )
        base = ring.base_ring()
        fixed = []
        for c in coeffs:
            if c.ring != ring and c.ring != base:
                raise RingMismatch("coefficient from a different ring")
            if c.has_aux():
                raise RingMismatch("derivation coefficients must be aux-free")
            fixed.append(c if c.ring == ring else c.lift(ring))
        self.ring = ring
        self.coeffs = tuple(fixed)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __call__(self, f: Poly) -> Poly:
        return self.apply(f)

    def apply(self, f: Poly) -> Poly:
        """Leibniz action: sum_i coeffs_i * df/dx_i; aux vars are constants."""
        if f.ring != self.ring:
            raise RingMismatch("polynomial from a different ring")
        out = self.ring.zero()
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            d = f.partial(i)
            if not d.is_zero():
                out = out + c * d
        return out

    def apply_times(self, f: Poly, times: int) -> Poly:
        for _ in range(times):
            f = self.apply(f)
        return f

    def bracket(self, other: "Derivation") -> "Derivation":
        """[D1, D2] = D1 D2 - D2 D1, by images on the generators."""
        if self.ring != other.ring:
            raise RingMismatch("derivations from different rings")
        return Derivation(
            self.ring,
            [
                self.apply(other.coeffs[i]) - other.apply(self.coeffs[i])
                for i in range(self.ring.n)
            ],
        )

    def p_power(self) -> "Derivation":
        """The p-th iterate D^p, again a derivation in characteristic p."""
        p = self.ring.ctx.p
        names = self.ring.ring_vars
        return Derivation(
            self.ring,
            [self.apply_times(self.ring.var(v), p) for v in names],
        )

    def degree(self):
        """max_i (deg D(x_i) - w_i); -inf for the zero derivation."""
        if self.is_zero():
            return NEG_INF
        return max(
            c.degree() - w
            for c, w in zip(self.coeffs, self.ring.weights)
            if not c.is_zero()
        )

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def render(self) -> str:
        """Text form `x^2*dx + 1*dy`, matching the CLI grammar."""
        parts = []
        for c, name in zip(self.coeffs, self.ring.ring_vars):
            if c.is_zero():
                continue
            cs = c.render()
            head = f"({cs})" if " + " in cs else cs
            parts.append(f"{head}*d{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.render()

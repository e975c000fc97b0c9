"""The skew polynomial ring F_q[x; theta, delta] with x*b = theta(b)*x + delta(b)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAFactor, RingTagMismatch, ZeroDivisor
from .gf import DerivationSpec, FieldElement, FieldSpec

NEG_INF = float("-inf")


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class SkewRing:
    """Ring tag: the field together with the automorphism power and derivation."""

    field: FieldSpec
    derivation: DerivationSpec

    def __post_init__(self):
        if self.derivation.field != self.field:
            raise RingTagMismatch("derivation defined over a different field")

    @classmethod
    def make(cls, field: FieldSpec, t: int = 1, beta=0) -> "SkewRing":
        return cls(field, DerivationSpec(field, t, beta))

    @property
    def t(self) -> int:
        return self.derivation.t

    @property
    def beta(self) -> int:
        return self.derivation.beta

    def poly(self, coeffs) -> "SkewPoly":
        """Polynomial from ascending coefficients (ints are codes, or FieldElements)."""
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec != self.field:
                    raise RingTagMismatch("coefficient from a different field")
                out.append(c.value)
            else:
                out.append(int(c))
        return SkewPoly(self, _trim(out))

    def parse(self, text: str) -> "SkewPoly":
        from .parsing import parse_poly

        return parse_poly(text, self)

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    def one(self) -> "SkewPoly":
        return SkewPoly(self, (1,))

    def constant(self, c: int) -> "SkewPoly":
        return SkewPoly(self, _trim([c]))

    def x(self) -> "SkewPoly":
        return SkewPoly(self, (0, 1))

    def monomial(self, deg: int, c: int = 1) -> "SkewPoly":
        return SkewPoly(self, _trim([0] * deg + [c]))

    def x_pow_minus_one(self, n: int) -> "SkewPoly":
        f = self.field
        return SkewPoly(self, tuple([f.neg(1)] + [0] * (n - 1) + [1]))

    def describe(self) -> str:
        return f"F_{self.field.q}[x; {self.derivation.describe()}]"

    # ----- low level operations on coefficient tuples ----------------------

    def _x_times(self, c) -> list[int]:
        """Coefficients of x * c(x): theta(c_j) x^{j+1} + delta(c_j) x^j."""
        f = self.field
        th = f.frob_table(self.t)
        out = [0] * (len(c) + 1)
        if self.beta == 0:
            for j, cj in enumerate(c):
                out[j + 1] = th[cj]
            return out
        beta = self.beta
        for j, cj in enumerate(c):
            if cj:
                tc = th[cj]
                out[j + 1] = f.add(out[j + 1], tc)
                out[j] = f.add(out[j], f.mul(beta, f.sub(tc, cj)))
        return out

    def _mul(self, a, b) -> tuple[int, ...]:
        if not a or not b:
            return ()
        f = self.field
        acc = [0] * (len(a) + len(b) - 1)
        P = list(b)  # x^i * b
        for i, ai in enumerate(a):
            if i:
                P = self._x_times(P)
            if ai:
                for j, pj in enumerate(P):
                    if pj:
                        acc[j] = f.add(acc[j], f.mul(ai, pj))
        return _trim(acc)

    def _add(self, a, b) -> tuple[int, ...]:
        f = self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = f.add(out[i], bi)
        return _trim(out)

    def _theta_pow(self, a: int, k: int) -> int:
        f = self.field
        return f.frob(a, (self.t * k) % f.m)

    def _right_divmod(self, a, b):
        if not b:
            raise ZeroDivisor("right division by the zero polynomial")
        f = self.field
        db = len(b) - 1
        r = list(a)
        q = [0] * max(len(a) - db, 0)
        inv_cache = {}
        while len(r) - 1 >= db and r:
            s = len(r) - 1
            shift = s - db
            lead_b = inv_cache.get(shift)
            if lead_b is None:
                lead_b = f.inv(self._theta_pow(b[-1], shift))
                inv_cache[shift] = lead_b
            c = f.mul(r[-1], lead_b)
            q[shift] = c
            # subtract c x^shift * b
            term = self._mul(self.monomial(shift, c).coeffs, b)
            for i, ti in enumerate(term):
                r[i] = f.sub(r[i], ti)
            r = list(_trim(r))
        return _trim(q), _trim(r)

    def _left_divmod(self, a, b):
        """(q, r) with a = b*q + r and deg r < deg b."""
        if not b:
            raise ZeroDivisor("left division by the zero polynomial")
        f = self.field
        db = len(b) - 1
        inv_lead = f.inv(b[-1])
        neg_t = (-self.t * db) % f.m
        r = list(a)
        q = [0] * max(len(a) - db, 0)
        while len(r) - 1 >= db and r:
            s = len(r) - 1
            shift = s - db
            c = f.frob(f.mul(inv_lead, r[-1]), neg_t)
            q[shift] = f.add(q[shift], c)
            term = self._mul(b, self.monomial(shift, c).coeffs)
            for i, ti in enumerate(term):
                r[i] = f.sub(r[i], ti)
            assert r[-1] == 0
            r = list(_trim(r))
        return _trim(q), _trim(r)


@dataclass(frozen=True)
class SkewPoly:
    """Immutable skew polynomial; ``coeffs`` are integer codes, ascending degree."""

    ring: SkewRing
    coeffs: tuple

    def _same(self, other: "SkewPoly"):
        if not isinstance(other, SkewPoly):
            raise TypeError("expected SkewPoly")
        if other.ring != self.ring:
            raise RingTagMismatch(f"{self.ring.describe()} vs {other.ring.describe()}")

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def vector(self, n: int) -> list[int]:
        """Coefficient vector zero padded to length n."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __add__(self, other):
        self._same(other)
        return SkewPoly(self.ring, self.ring._add(self.coeffs, other.coeffs))

    def __neg__(self):
        f = self.field
        return SkewPoly(self.ring, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SkewPoly):
            return skew_mul(self, other)
        return NotImplemented

    def scale_left(self, c: int) -> "SkewPoly":
        """c * self for a field code c (no twisting needed: scalars act on the left)."""
        f = self.field
        return SkewPoly(self.ring, _trim([f.mul(c, a) for a in self.coeffs]))

    def monic(self) -> "SkewPoly":
        """Left multiple by the inverse leading coefficient; same left ideal."""
        if not self.coeffs:
            raise ZeroDivisor("zero polynomial has no monic form")
        return self.scale_left(self.field.inv(self.lead))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SkewPoly({format_poly(self)!r})"


def format_poly(f: SkewPoly) -> str:
    """Canonical text: descending degree, ``c*x^k`` terms joined by ``+``."""
    F = f.field
    if not f.coeffs:
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        cs = F.format(c)
        if i == 0:
            parts.append(cs)
            continue
        mono = "x" if i == 1 else f"x^{i}"
        parts.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(parts)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._same(g)
    return SkewPoly(f.ring, f.ring._mul(f.coeffs, g.coeffs))


def monomial_times_scalar(n: int, r, ring: SkewRing) -> SkewPoly:
    """Full expansion of x^n * r."""
    if n < 0:
        raise ValueError("n must be non-negative")
    code = r.value if isinstance(r, FieldElement) else int(r)
    P = [code]
    for _ in range(n):
        P = ring._x_times(P)
    return SkewPoly(ring, _trim(P))


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with f = q*g + r and deg r < deg g."""
    f._same(g)
    q, r = f.ring._right_divmod(f.coeffs, g.coeffs)
    return SkewPoly(f.ring, q), SkewPoly(f.ring, r)


def left_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with f = g*q + r and deg r < deg g."""
    f._same(g)
    q, r = f.ring._left_divmod(f.coeffs, g.coeffs)
    return SkewPoly(f.ring, q), SkewPoly(f.ring, r)


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return right_divmod(f, g)[1].is_zero()


def reduce_mod(f: SkewPoly, n: int) -> SkewPoly:
    """Remainder of right division by x^n - 1."""
    return right_divmod(f, f.ring.x_pow_minus_one(n))[1]


def two_sided_factor_check(g: SkewPoly, n: int) -> tuple[SkewPoly, SkewPoly]:
    """Return (h, h') with h*g = x^n - 1 = g*h'.

    ``g`` is used exactly as given.  Scaling g by a unit changes h' (by the
    corresponding right unit factor) so callers decide on normalization.
    """
    ring = g.ring
    xn = ring.x_pow_minus_one(n)
    h, r = right_divmod(xn, g)
    if not r.is_zero():
        raise NotAFactor(f"{format_poly(g)} is not a right divisor of x^{n} - 1", remainder=r)
    hp, r2 = left_divmod(xn, g)
    if not r2.is_zero():
        raise NotAFactor(f"{format_poly(g)} is not a left divisor of x^{n} - 1", remainder=r2)
    if skew_mul(h, g) != xn or skew_mul(g, hp) != xn:  # pragma: no cover - algebraic certainty
        raise NotAFactor("cofactor reconstruction failed")
    return h, hp


def is_central(f: SkewPoly) -> bool:
    """f commutes with x and with the generator w (hence with the whole ring)."""
    ring = f.ring
    x = ring.x()
    w = ring.constant(ring.field.gen.value)
    return skew_mul(f, x) == skew_mul(x, f) and skew_mul(f, w) == skew_mul(w, f)

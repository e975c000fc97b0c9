"""The ring R_{q,s} = F_q[v_1..v_s]/<v_i^2 - v_i, v_i v_j> held in idempotent (CRT) coordinates.

With zeta_0 = 1 - (v_1 + ... + v_s) and zeta_j = v_j the ring splits as
F_q^{s+1}; an element a_0 + a_1 v_1 + ... + a_s v_s has CRT coordinates
t_0 = a_0 and t_j = a_0 + a_j.  Everything here therefore acts coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidParameters, SpecMismatch
from .gf import DerivationSpec, FieldElement, FieldSpec

MAX_S = 16


@dataclass(frozen=True)
class RqsSpec:
    field: FieldSpec
    s: int
    derivation: DerivationSpec

    def __post_init__(self):
        if not 1 <= self.s <= MAX_S:
            raise InvalidParameters(f"s must lie in [1, {MAX_S}], got {self.s}")
        if self.derivation.field != self.field:
            raise SpecMismatch("derivation defined over another field")

    @property
    def width(self) -> int:
        return self.s + 1

    def element(self, crt) -> "RqsElement":
        vals = tuple(c.value if isinstance(c, FieldElement) else int(c) for c in crt)
        if len(vals) != self.width:
            raise DimensionMismatch(f"expected {self.width} CRT coordinates, got {len(vals)}")
        return RqsElement(self, vals)

    def parse(self, text: str) -> "RqsElement":
        from .parsing import parse_crt

        return self.element(parse_crt(text, self.field))

    def from_v_basis(self, coeffs) -> "RqsElement":
        """(a_0, a_1, ..., a_s) meaning a_0 + a_1 v_1 + ... + a_s v_s."""
        a = [c.value if isinstance(c, FieldElement) else int(c) for c in coeffs]
        if len(a) != self.width:
            raise DimensionMismatch("wrong number of v-basis coefficients")
        f = self.field
        return RqsElement(self, (a[0],) + tuple(f.add(a[0], aj) for aj in a[1:]))

    def zeta(self, i: int) -> "RqsElement":
        return RqsElement(self, tuple(1 if j == i else 0 for j in range(self.width)))

    def zero(self) -> "RqsElement":
        return RqsElement(self, (0,) * self.width)

    def one(self) -> "RqsElement":
        return RqsElement(self, (1,) * self.width)

    def v(self, j: int) -> "RqsElement":
        """The generator v_j (1 <= j <= s); equal to zeta_j."""
        if not 1 <= j <= self.s:
            raise InvalidParameters("v index out of range")
        return self.zeta(j)

    def literal_multiplier(self) -> "RqsElement":
        """1 + v_1 + ... + v_s, whose CRT coordinates are (1, 2, ..., 2)."""
        f = self.field
        return RqsElement(self, (1,) + (f.from_int(2),) * self.s)

    def uniform_multiplier(self) -> "RqsElement":
        """beta * 1, the multiplier giving the same inner derivation on every component."""
        return RqsElement(self, (self.derivation.beta,) * self.width)


@dataclass(frozen=True)
class RqsElement:
    spec: RqsSpec
    crt: tuple

    def _same(self, other):
        if not isinstance(other, RqsElement) or other.spec != self.spec:
            raise SpecMismatch("elements of different rings")

    def __add__(self, other):
        self._same(other)
        f = self.spec.field
        return RqsElement(self.spec, tuple(f.add(a, b) for a, b in zip(self.crt, other.crt)))

    def __sub__(self, other):
        self._same(other)
        f = self.spec.field
        return RqsElement(self.spec, tuple(f.sub(a, b) for a, b in zip(self.crt, other.crt)))

    def __neg__(self):
        f = self.spec.field
        return RqsElement(self.spec, tuple(f.neg(a) for a in self.crt))

    def __mul__(self, other):
        f = self.spec.field
        if isinstance(other, FieldElement):
            return RqsElement(self.spec, tuple(f.mul(a, other.value) for a in self.crt))
        self._same(other)
        return RqsElement(self.spec, tuple(f.mul(a, b) for a, b in zip(self.crt, other.crt)))

    def scale(self, c: int) -> "RqsElement":
        f = self.spec.field
        return RqsElement(self.spec, tuple(f.mul(c, a) for a in self.crt))

    def is_unit(self) -> bool:
        return all(self.crt)

    def is_zero(self) -> bool:
        return not any(self.crt)

    def v_basis(self) -> tuple:
        """Inverse of RqsSpec.from_v_basis: (a_0, a_1, ..., a_s)."""
        f = self.spec.field
        t0 = self.crt[0]
        return (t0,) + tuple(f.sub(tj, t0) for tj in self.crt[1:])

    def project(self, i: int) -> int:
        return self.crt[i]

    def __str__(self):
        f = self.spec.field
        return "(" + ", ".join(f.format(a) for a in self.crt) + ")"


def gamma(r: RqsElement) -> RqsElement:
    d = r.spec.derivation
    return RqsElement(r.spec, tuple(d.theta(a) for a in r.crt))


def delta_u(r: RqsElement, u: RqsElement) -> RqsElement:
    """u * (gamma(r) - r); a gamma-derivation for every u since the ring is commutative."""
    return u * (gamma(r) - r)


def delta(r: RqsElement) -> RqsElement:
    """(1 + v_1 + ... + v_s)(gamma(r) - r)."""
    return delta_u(r, r.spec.literal_multiplier())


def delta_uniform(r: RqsElement) -> RqsElement:
    """beta (gamma(r) - r): componentwise the inner derivation of the DerivationSpec."""
    return delta_u(r, r.spec.uniform_multiplier())


def pseudo_linear_apply(vec, multiplier: RqsElement | None = None) -> list[RqsElement]:
    """T(v)_j = gamma(v_{j-1 mod n}) + Delta(v_j), with Delta the uniform-beta derivation by default."""
    if not vec:
        raise InvalidParameters("empty vector")
    spec = vec[0].spec
    u = spec.uniform_multiplier() if multiplier is None else multiplier
    n = len(vec)
    return [gamma(vec[(j - 1) % n]) + delta_u(vec[j], u) for j in range(n)]


def theta_pseudo_linear(vec, d: DerivationSpec) -> list[int]:
    """The F_q version on integer codes: T(v)_j = theta(v_{j-1}) + delta(v_j)."""
    n = len(vec)
    f = d.field
    return [f.add(d.theta(vec[(j - 1) % n]), d.derive(vec[j])) for j in range(n)]


def crt_split(vec) -> list[list[int]]:
    """Component vectors (one per idempotent) of a vector over R_{q,s}."""
    if not vec:
        return []
    w = vec[0].spec.width
    return [[r.crt[i] for r in vec] for i in range(w)]


def crt_join(spec: RqsSpec, comps) -> list[RqsElement]:
    """Inverse of crt_split: sum_i zeta_i c_i."""
    comps = [list(c) for c in comps]
    if len(comps) != spec.width or len({len(c) for c in comps}) != 1:
        raise DimensionMismatch("need s+1 component vectors of equal length")
    return [RqsElement(spec, tuple(c[j] for c in comps)) for j in range(len(comps[0]))]

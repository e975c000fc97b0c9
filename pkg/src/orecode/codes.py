"""(theta, delta)-cyclic codes over F_q and their (gamma, Delta)-cyclic sums over R_{q,s}.

A code of length n is the left ideal generated by a right divisor g of x^n - 1
in F_q[x; theta, delta], read as the T-closed subspace of F_q^n where
T(v)_j = theta(v_{j-1}) + delta(v_j) is the vector shadow of x * (.).

Generators are stored exactly as supplied.  The right cofactor h' with
g h' = x^n - 1 depends on the scaling of g (scaling g by c on the left turns
h' into h' composed with a unit on the right), and the remainder test on
h' h' is sensitive to that choice, so callers get both ``g`` and ``g_monic``
and the cofactors always refer to ``g``.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, NotACode, NotAFactor, ZeroCode
from .linalg import FqMatrix
from .rqs import RqsElement, RqsSpec, crt_split, pseudo_linear_apply
from .skewpoly import (
    SkewPoly,
    SkewRing,
    format_poly,
    is_central,
    reduce_mod,
    right_divides,
    right_divmod,
    skew_mul,
    two_sided_factor_check,
)

ENUMERATION_BUDGET = 10**7


def _tables(ring: SkewRing):
    f = ring.field
    th = np.asarray(f.frob_table(ring.t), dtype=np.int64)
    der = np.asarray([ring.derivation.derive(a) for a in range(f.q)], dtype=np.int64)
    return th, der


def t_operator(ring: SkewRing, v) -> np.ndarray:
    """T(v)_j = theta(v_{j-1 mod n}) + delta(v_j) on an integer-code vector."""
    th, der = _tables(ring)
    v = np.asarray(v, dtype=np.int64)
    return ring.field.add_arr(th[np.roll(v, 1)], der[v])


def t_orbit(ring: SkewRing, v, count: int) -> np.ndarray:
    """Rows v, T(v), ..., T^{count-1}(v)."""
    th, der = _tables(ring)
    f = ring.field
    v = np.asarray(v, dtype=np.int64)
    out = np.zeros((count, v.size), dtype=np.int64)
    for j in range(count):
        out[j] = v
        v = f.add_arr(th[np.roll(v, 1)], der[v])
    return out


@dataclass(frozen=True, eq=False)
class ThetaCyclicCode:
    ring: SkewRing
    n: int
    g: SkewPoly
    h: SkewPoly
    h_prime: SkewPoly

    @property
    def field(self):
        return self.ring.field

    @property
    def r(self) -> int:
        return self.g.degree

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def g_monic(self) -> SkewPoly:
        return self.g.monic()

    @cached_property
    def generator(self) -> FqMatrix:
        return FqMatrix(self.field, t_orbit(self.ring, self.g.vector(self.n), self.k))

    @cached_property
    def parity(self) -> FqMatrix:
        return self.generator.kernel()

    def x_n_minus_one_central(self) -> bool:
        return is_central(self.ring.x_pow_minus_one(self.n))

    def describe(self) -> str:
        return f"[{self.n},{self.k}] code generated by {format_poly(self.g)} over F_{self.field.q}"


def build_theta_code(g: SkewPoly, n: int) -> ThetaCyclicCode:
    if g.is_zero():
        raise NotACode("zero generator")
    if g.degree >= n:
        if g.degree == n and right_divides(g, g.ring.x_pow_minus_one(n)):
            raise NotACode(f"generator of degree {n} gives the zero code")
        raise NotAFactor(f"degree {g.degree} exceeds length {n}")
    h, hp = two_sided_factor_check(g, n)
    return ThetaCyclicCode(g.ring, n, g, h, hp)


def generator_matrix(c: ThetaCyclicCode) -> FqMatrix:
    """k x n matrix with rows T^j(g), j < k."""
    return c.generator


def parity_basis(c: ThetaCyclicCode) -> FqMatrix:
    """Rows spanning the Euclidean dual, computed as the kernel of the generator matrix."""
    return c.parity


def parity_from_cofactor(c: ThetaCyclicCode) -> FqMatrix:
    """Dual basis read off the columns of the n x n matrix with rows T^j(h').

    For any word c the product c . H is the coefficient vector of c(x) h'(x)
    reduced modulo x^n - 1, so the columns of H lie in the dual; the
    lexicographically first maximal independent column set is returned (as rows).
    """
    H = FqMatrix(c.field, t_orbit(c.ring, c.h_prime.vector(c.n), c.n))
    cols = H.independent_columns()
    return H.columns(cols).T()


def parity_cross_check(c: ThetaCyclicCode) -> bool:
    alt = parity_from_cofactor(c)
    return alt.nrows == c.r and alt.row_space_equal(c.parity)


def word_poly(c: ThetaCyclicCode, word) -> SkewPoly:
    word = list(word)
    if len(word) != c.n:
        raise DimensionMismatch(f"word length {len(word)} != {c.n}")
    return c.ring.poly(word)


def membership(c: ThetaCyclicCode, word) -> bool:
    """c(x) h'(x) reduces to zero modulo x^n - 1."""
    return reduce_mod(skew_mul(word_poly(c, word), c.h_prime), c.n).is_zero()


def membership_rank(c: ThetaCyclicCode, word) -> bool:
    return c.generator.contains_vector(list(word))


def hh_quotient(c: ThetaCyclicCode) -> tuple[SkewPoly, SkewPoly]:
    """(Q, R) with h' h' = Q (x^n - 1) + R."""
    return right_divmod(skew_mul(c.h_prime, c.h_prime), c.ring.x_pow_minus_one(c.n))


def dual_containing_theta(c: ThetaCyclicCode) -> bool:
    """Remainder criterion: x^n - 1 right-divides h'(x) h'(x)."""
    return hh_quotient(c)[1].is_zero()


def dual_containing_rank(c: ThetaCyclicCode) -> bool:
    """Direct test that the dual row space sits inside the code's row space."""
    return c.generator.row_space_contains(c.parity)


# ----- codes over R_{q,s} ----------------------------------------------------


@dataclass
class DualCheck:
    ok: bool
    failing: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class GammaCyclicCode:
    rqs: RqsSpec
    n: int
    components: tuple

    @property
    def ring(self) -> SkewRing:
        return self.components[0].ring

    @property
    def k_total(self) -> int:
        return sum(c.k for c in self.components)

    @property
    def cardinality_exponent(self) -> int:
        """log_q |C| = (s+1) n - sum deg g_i."""
        return (self.rqs.s + 1) * self.n - sum(c.r for c in self.components)

    def cardinality(self) -> int:
        return self.rqs.field.q ** self.cardinality_exponent


def build_gamma_code(spec: RqsSpec, n: int, gens) -> GammaCyclicCode:
    gens = list(gens)
    if len(gens) != spec.width:
        raise DimensionMismatch(f"need {spec.width} generators, got {len(gens)}")
    ring = SkewRing(spec.field, spec.derivation)
    comps = []
    for i, g in enumerate(gens):
        if isinstance(g, str):
            g = ring.parse(g)
        if g.ring != ring:
            g = ring.poly(g.coeffs)
        try:
            comps.append(build_theta_code(g, n))
        except NotAFactor as exc:
            raise NotAFactor(f"component {i}: {exc}", component=i, remainder=exc.remainder) from None
    return GammaCyclicCode(spec, n, tuple(comps))


def dual_containing_gamma(c: GammaCyclicCode) -> DualCheck:
    bad = [i for i, comp in enumerate(c.components) if not dual_containing_theta(comp)]
    return DualCheck(not bad, bad)


def dual_containing_gamma_rank(c: GammaCyclicCode) -> DualCheck:
    bad = [i for i, comp in enumerate(c.components) if not dual_containing_rank(comp)]
    return DualCheck(not bad, bad)


def gamma_membership(c: GammaCyclicCode, vec) -> bool:
    comps = crt_split(list(vec))
    return all(membership_rank(comp, v) for comp, v in zip(c.components, comps))


def gamma_closure_check(c: GammaCyclicCode, words) -> bool:
    """T_{gamma,Delta}(w) is again a codeword for every supplied codeword."""
    return all(gamma_membership(c, pseudo_linear_apply(list(w))) for w in words)


def random_gamma_codeword(c: GammaCyclicCode, rng) -> list[RqsElement]:
    q = c.rqs.field.q
    comps = []
    for comp in c.components:
        msg = rng.integers(0, q, size=comp.k)
        G = comp.generator
        comps.append((FqMatrix(comp.field, msg.reshape(1, -1)) @ G).a[0].tolist())
    from .rqs import crt_join

    return crt_join(c.rqs, comps)


# ----- generator extraction and divisor search --------------------------------


def t_closure(ring: SkewRing, words, n: int) -> FqMatrix:
    """Row basis of the smallest T-closed subspace containing ``words``."""
    f = ring.field
    M = FqMatrix.from_rows(f, [list(w) for w in words], ncols=n)
    if M.ncols != n:
        raise DimensionMismatch("word length differs from n")
    basis = M.row_basis()
    for _ in range(n + 1):
        if basis.nrows == 0:
            return basis
        images = FqMatrix(f, np.array([t_operator(ring, row) for row in basis.a]))
        nxt = basis.vstack(images).row_basis()
        if nxt.nrows == basis.nrows:
            return basis
        basis = nxt
    return basis


def extract_generator(ring: SkewRing, words, n: int) -> SkewPoly:
    """Monic polynomial of least degree in the T-closure of ``words``."""
    closure = t_closure(ring, words, n)
    if closure.nrows == 0:
        raise ZeroCode("the words span the zero code")
    rev = FqMatrix(ring.field, closure.a[:, ::-1])
    R, piv = rev.rref()
    row = R.a[len(piv) - 1][::-1]
    g = ring.poly(row.tolist())
    code = build_theta_code(g, n) if g.degree < n else None
    if code is None or not code.generator.row_space_equal(closure):  # pragma: no cover
        raise NotAFactor("closure is not generated by its minimal polynomial")
    return g


def _divisor_chunk(args):
    ring, n, deg, prefix_vals, rest, require_dc = args
    q = ring.field.q
    xn = ring.x_pow_minus_one(n)
    out = []
    for tail in itertools.product(range(q), repeat=rest):
        coeffs = list(prefix_vals) + list(tail) + [1]
        g = ring.poly(coeffs)
        if right_divmod(xn, g)[1].is_zero():
            if require_dc:
                code = ThetaCyclicCode(ring, n, g, *two_sided_factor_check(g, n)) if deg < n else None
                if code is None or not dual_containing_theta(code):
                    continue
            out.append(tuple(coeffs))
    return out


def enumerate_right_divisors(
    ring: SkewRing,
    n: int,
    max_deg: int,
    require_dual_containing: bool = False,
    budget: int = ENUMERATION_BUDGET,
    workers: int | None = None,
) -> list[SkewPoly]:
    """All monic right divisors of x^n - 1 of degree 1..max_deg.

    Ordered by degree, then lexicographically by the ascending coefficient
    codes; the order does not depend on the worker count.
    """
    max_deg = min(max_deg, n)
    q = ring.field.q
    total = sum(q**d for d in range(1, max_deg + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed the budget of {budget}")
    if workers is None:
        workers = int(os.environ.get("ORECODE_THREADS", "1") or 1)
    tasks = []
    for d in range(1, max_deg + 1):
        split = 1 if d >= 2 and q ** d > 4096 else 0
        for prefix in itertools.product(range(q), repeat=split):
            tasks.append((ring, n, d, prefix, d - split, require_dual_containing))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_divisor_chunk, tasks))
    else:
        chunks = [_divisor_chunk(t) for t in tasks]
    found = [c for chunk in chunks for c in chunk]
    found.sort(key=lambda c: (len(c), c))
    return [ring.poly(c) for c in found]

"""CSS quantum codes from dual-containing classical codes.

Basis errors are qudit Pauli operators X(kappa) Z(chi), written [kappa | chi].
A stabilizer row [a | b] acts on such an error with eigenvalue phase
omega^{Tr(a.chi - b.kappa)}, so the syndrome entry is Tr(a.chi - b.kappa) in F_p.
No global phases are tracked.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import GammaCyclicCode, dual_containing_gamma, dual_containing_gamma_rank
from .errors import BudgetExceeded, DimensionMismatch, InvalidParameters, NotDualContaining, NotPrimitive
from .gf import GF, FieldElement, FieldSpec
from .linalg import FqMatrix

TABLE_LIMIT = 10**6
OPERATOR_LIMIT = 16


@dataclass(frozen=True)
class QuantumParams:
    n_q: int
    k_q: int
    d_q: int
    q: int

    @property
    def singleton_slack(self) -> int:
        return self.n_q + 2 - self.k_q - 2 * self.d_q

    def __str__(self):
        return f"[[{self.n_q},{self.k_q},{self.d_q}]]_{self.q}"


def quantum_params(n: int, k: int, d: int, q: int) -> QuantumParams:
    """[[n, 2k - n, d]]_q from a dual-containing [n, k, d]_q code."""
    if 2 * k < n:
        raise InvalidParameters(f"2k - n = {2 * k - n} is negative")
    return QuantumParams(n, 2 * k - n, d, q)


def quantum_params_from_gamma(code: GammaCyclicCode, d_H: int, criterion: str = "remainder") -> QuantumParams:
    """[[(s+1)n, 2 sum k_i - (s+1)n, d_H]]_q after checking dual containment."""
    if criterion == "remainder":
        check = dual_containing_gamma(code)
    elif criterion == "rank":
        check = dual_containing_gamma_rank(code)
    elif criterion == "none":
        check = None
    else:
        raise InvalidParameters(f"unknown criterion {criterion!r}")
    if check is not None and not check:
        raise NotDualContaining(f"components {check.failing} are not dual-containing")
    n_q = code.rqs.width * code.n
    return quantum_params(n_q, code.k_total, d_H, code.rqs.field.q)


def coset_count(n: int, k1: int, k2: int, p: int, m: int) -> int:
    if k1 + k2 < n:
        raise InvalidParameters("k1 + k2 must be at least n")
    return p ** (m * (k1 + k2 - n))


@dataclass(frozen=True)
class PauliVector:
    field: FieldSpec
    a: tuple  # X part (kappa)
    b: tuple  # Z part (chi)

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise DimensionMismatch("X and Z parts differ in length")

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "PauliVector":
        from .parsing import parse_pauli

        a, b = parse_pauli(text, field)
        return cls(field, tuple(a), tuple(b))

    @classmethod
    def zero(cls, field, n):
        return cls(field, (0,) * n, (0,) * n)

    @property
    def n(self):
        return len(self.a)

    @property
    def weight(self) -> int:
        return sum(1 for x, z in zip(self.a, self.b) if x or z)

    def __add__(self, other):
        f = self.field
        return PauliVector(
            f,
            tuple(f.add(x, y) for x, y in zip(self.a, other.a)),
            tuple(f.add(x, y) for x, y in zip(self.b, other.b)),
        )

    def __str__(self):
        f = self.field
        return "[" + ", ".join(f.format(x) for x in self.a) + " | " + ", ".join(f.format(x) for x in self.b) + "]"


def symplectic_syndrome(check: FqMatrix, e: PauliVector) -> tuple:
    """Tr(a.chi - b.kappa) for each row [a | b] of a 2n-column check matrix."""
    f = check.field
    n = e.n
    if check.ncols != 2 * n:
        raise DimensionMismatch(f"check matrix has {check.ncols} columns, error has length {n}")
    A = FqMatrix(f, check.a[:, :n])
    B = FqMatrix(f, check.a[:, n:])
    chi = FqMatrix(f, np.array(e.b, dtype=np.int64).reshape(-1, 1))
    kap = FqMatrix(f, np.array(e.a, dtype=np.int64).reshape(-1, 1))
    v = f.sub_arr((A @ chi).a[:, 0], (B @ kap).a[:, 0])
    return tuple(int(x) for x in f.trace_arr(v))


@dataclass(eq=False)
class CssCode:
    H1: FqMatrix
    H2: FqMatrix
    check_matrix: FqMatrix
    n: int
    k1: int
    k2: int
    _table: dict | None = dc_field(default=None, repr=False)
    table_weight: int = 0

    @property
    def field(self) -> FieldSpec:
        return self.H1.field

    @property
    def stabilizer_count(self) -> int:
        return self.H1.nrows + self.H2.nrows

    @property
    def k_quantum(self) -> int:
        return self.k1 + self.k2 - self.n

    def syndrome(self, e: PauliVector) -> tuple:
        return symplectic_syndrome(self.check_matrix, e)

    def full_syndrome(self, e: PauliVector) -> tuple:
        """Syndrome under the alpha-expanded check matrix (alpha = w)."""
        return symplectic_syndrome(expand_check_matrix(self, self.field.gen), e)


def build_css(H1: FqMatrix, H2: FqMatrix) -> CssCode:
    """Check matrix [[H1, 0], [0, H2]]; requires H2 H1^T = 0."""
    if H1.field != H2.field or H1.ncols != H2.ncols:
        raise DimensionMismatch("parity matrices must share field and length")
    if not (H2 @ H1.T()).is_zero():
        raise NotDualContaining("H2 H1^T is nonzero")
    f = H1.field
    n = H1.ncols
    top = H1.hstack(FqMatrix.zeros(f, H1.nrows, n))
    bot = FqMatrix.zeros(f, H2.nrows, n).hstack(H2)
    return CssCode(H1, H2, top.vstack(bot), n, n - H1.rank(), n - H2.rank())


def expand_check_matrix(css: CssCode, alpha) -> FqMatrix:
    """Replace each block H by the stack H, alpha H, ..., alpha^{m-1} H."""
    f = css.field
    a = alpha.value if isinstance(alpha, FieldElement) else int(alpha)
    if a == 0 or (f.q > 2 and math.gcd(f.log(a), f.q - 1) != 1):
        raise NotPrimitive(f"{f.format(a)} is not primitive in F_{f.q}")
    rows = []
    n = css.n
    for H, left in ((css.H1, True), (css.H2, False)):
        for i in range(f.m):
            S = H.scale(f.pow(a, i))
            Z = FqMatrix.zeros(f, H.nrows, n)
            rows.append(S.hstack(Z) if left else Z.hstack(S))
    out = rows[0]
    for r in rows[1:]:
        out = out.vstack(r)
    return out


def table_size(n: int, q: int, t: int) -> int:
    return sum(math.comb(n, w) * (q * q - 1) ** w for w in range(t + 1))


def _errors_of_weight(f, n, w):
    pairs = [(x, z) for x in range(f.q) for z in range(f.q) if x or z]
    for pos in itertools.combinations(range(n), w):
        for vals in itertools.product(pairs, repeat=w):
            a = [0] * n
            b = [0] * n
            for p, (x, z) in zip(pos, vals):
                a[p] = x
                b[p] = z
            yield PauliVector(f, tuple(a), tuple(b))


def build_syndrome_table(css: CssCode, t: int, limit: int = TABLE_LIMIT) -> bool:
    """Map full syndromes of every error of weight <= t to a lightest such error.

    Returns False (and builds nothing) when the table would exceed ``limit``.
    """
    f = css.field
    if table_size(css.n, f.q, t) > limit:
        css._table = None
        return False
    expanded = expand_check_matrix(css, f.gen)
    table = {}
    for w in range(t + 1):
        for e in _errors_of_weight(f, css.n, w) if w else [PauliVector.zero(f, css.n)]:
            table.setdefault(symplectic_syndrome(expanded, e), e)
    css._table = table
    css.table_weight = t
    return True


def _classical_decode(H: FqMatrix, syn: np.ndarray, t: int):
    f = H.field
    n = H.ncols
    if not syn.any():
        return [0] * n
    for w in range(1, t + 1):
        if math.comb(n, w) * (f.q - 1) ** w > TABLE_LIMIT:
            return None
        for pos in itertools.combinations(range(n), w):
            sub = H.a[:, list(pos)]
            for vals in itertools.product(range(1, f.q), repeat=w):
                acc = np.zeros(H.nrows, dtype=np.int64)
                for j, v in enumerate(vals):
                    acc = f.add_arr(acc, f.mul_arr(v, sub[:, j]))
                if np.array_equal(acc, syn):
                    e = [0] * n
                    for p, v in zip(pos, vals):
                        e[p] = v
                    return e
    return None


def decode_basis_error(css: CssCode, syndrome: tuple, t: int | None = None):
    """Lightest stored error with this full syndrome, or None when unknown."""
    if css._table is not None:
        return css._table.get(tuple(syndrome))
    # per-block fallback: recover H1 chi and H2 kappa over F_q from the expanded syndrome
    f = css.field
    m = f.m
    r1, r2 = css.H1.nrows, css.H2.nrows
    syn = list(syndrome)
    if len(syn) != m * (r1 + r2):
        raise DimensionMismatch("expected a full (expanded) syndrome")
    t = 1 if t is None else t
    top = _untrace(f, syn[: m * r1], r1)
    bot = _untrace(f, syn[m * r1 :], r2)
    chi = _classical_decode(css.H1, top, t)
    kap = _classical_decode(css.H2, f.neg_arr(bot), t)
    if chi is None or kap is None:
        return None
    return PauliVector(f, tuple(kap), tuple(chi))


def _untrace(f, vals, r):
    """Recover y in F_q^r from Tr(alpha^i y_j), i < m (alpha = w)."""
    m = f.m
    basis = [f.exp(i) for i in range(m)]
    lookup = {}
    for y in range(f.q):
        lookup[tuple(f.trace(f.mul(b, y)) for b in basis)] = y
    out = np.zeros(r, dtype=np.int64)
    for j in range(r):
        out[j] = lookup[tuple(vals[i * r + j] for i in range(m))]
    return out


# ----- dense operator verification ---------------------------------------------


@dataclass
class OperatorReport:
    p: int
    m: int
    unitary_residual: float
    x_group_residual: float
    z_group_residual: float
    commutation_residual: float
    count: int

    @property
    def max_residual(self) -> float:
        return max(self.unitary_residual, self.x_group_residual, self.z_group_residual, self.commutation_residual)

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_residual < tol


def x_operator(f: FieldSpec, kappa: int) -> np.ndarray:
    q = f.q
    M = np.zeros((q, q), dtype=complex)
    for th in range(q):
        M[f.add(kappa, th), th] = 1.0
    return M


def z_operator(f: FieldSpec, chi: int) -> np.ndarray:
    omega = cmath.exp(2j * cmath.pi / f.p)
    return np.diag([omega ** f.trace(f.mul(chi, th)) for th in range(f.q)])


def verify_operator_algebra(p: int, m: int = 1) -> OperatorReport:
    if p**m > OPERATOR_LIMIT:
        raise BudgetExceeded(f"p^m = {p ** m} above dense limit {OPERATOR_LIMIT}")
    f = GF(p**m)
    q = f.q
    omega = cmath.exp(2j * cmath.pi / p)
    X = [x_operator(f, k) for k in range(q)]
    Z = [z_operator(f, c) for c in range(q)]
    eye = np.eye(q)
    ures = max(np.abs(M.conj().T @ M - eye).max() for M in X + Z)
    xres = zres = cres = 0.0
    count = 0
    for a in range(q):
        for b in range(q):
            xres = max(xres, np.abs(X[a] @ X[b] - X[f.add(a, b)]).max())
            zres = max(zres, np.abs(Z[a] @ Z[b] - Z[f.add(a, b)]).max())
            phase = omega ** f.trace(f.mul(a, b))
            cres = max(cres, np.abs(Z[a] @ X[b] - phase * (X[b] @ Z[a])).max())
            count += 1
    return OperatorReport(p, m, float(ures), float(xres), float(zres), float(cres), count)


def hamming7_parity() -> FqMatrix:
    """Binary [7,4,3] Hamming parity matrix; column j is the binary expansion of j+1."""
    f = GF(2)
    rows = [[((j + 1) >> b) & 1 for j in range(7)] for b in range(3)]
    return FqMatrix.from_rows(f, rows)


def hamming7_css() -> CssCode:
    H = hamming7_parity()
    return build_css(H, H)

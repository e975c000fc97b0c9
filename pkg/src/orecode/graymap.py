"""Gray map phi: R_{q,s}^n -> F_q^{(s+1)n}, r |-> ((crt r_0) G, ..., (crt r_{n-1}) G).

Output layout is block interleaved: positions [j(s+1), (j+1)(s+1)) carry the
image of coordinate j.  G must be invertible with G G^T = c_G I.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import GammaCyclicCode
from .errors import DimensionMismatch, GrayMatrixError
from .gf import FieldSpec
from .linalg import FqMatrix


@dataclass(frozen=True, eq=False)
class GrayMatrix:
    G: FqMatrix
    c_G: int

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def size(self) -> int:
        return self.G.nrows

    @classmethod
    def from_matrix(cls, G: FqMatrix) -> "GrayMatrix":
        if G.nrows != G.ncols or G.nrows == 0:
            raise GrayMatrixError(f"Gray matrix must be square, got {G.shape}")
        if G.rank() != G.nrows:
            raise GrayMatrixError("Gray matrix is singular")
        GG = G @ G.T()
        c = int(GG.a[0, 0])
        expect = FqMatrix.identity(G.field, G.nrows).scale(c)
        if c == 0 or GG != expect:
            raise GrayMatrixError("G G^T is not a nonzero scalar multiple of the identity")
        return cls(G, c)

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "GrayMatrix":
        from .parsing import parse_matrix

        return cls.from_matrix(parse_matrix(text, field))

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> "GrayMatrix":
        return cls.from_matrix(FqMatrix.identity(field, size))


def gray_apply(vec, gm: GrayMatrix) -> list[int]:
    """phi of a vector of RqsElements (or of raw CRT tuples)."""
    crt = [r.crt if hasattr(r, "crt") else tuple(r) for r in vec]
    if any(len(t) != gm.size for t in crt):
        raise DimensionMismatch(f"CRT width differs from Gray matrix size {gm.size}")
    if not crt:
        return []
    M = FqMatrix(gm.field, np.array(crt, dtype=np.int64))
    return (M @ gm.G).a.reshape(-1).tolist()


def _embed_rows(field, rows: np.ndarray, grow: np.ndarray) -> np.ndarray:
    """Rows r (over F_q^n) placed in component i: block j becomes r_j * G[i, :]."""
    k, n = rows.shape
    w = grow.size
    out = field.mul_arr(rows[:, :, None], grow[None, None, :])
    return out.reshape(k, n * w)


def gray_image_generator(code: GammaCyclicCode, gm: GrayMatrix) -> FqMatrix:
    """Generator matrix of phi(C): sum k_i rows, (s+1) n columns."""
    if gm.size != code.rqs.width:
        raise DimensionMismatch("Gray matrix size differs from s+1")
    f = gm.field
    blocks = [
        _embed_rows(f, comp.generator.a, gm.G.a[i]) for i, comp in enumerate(code.components) if comp.k
    ]
    if not blocks:
        return FqMatrix.zeros(f, 0, code.n * gm.size)
    return FqMatrix(f, np.vstack(blocks))


gray_image_code = gray_image_generator


def gray_image_of_dual(code: GammaCyclicCode, gm: GrayMatrix) -> FqMatrix:
    """Generator matrix of phi(C^perp), with C^perp = sum zeta_i C_i^perp."""
    f = gm.field
    blocks = [
        _embed_rows(f, comp.parity.a, gm.G.a[i]) for i, comp in enumerate(code.components) if comp.r
    ]
    if not blocks:
        return FqMatrix.zeros(f, 0, code.n * gm.size)
    return FqMatrix(f, np.vstack(blocks))


def duality_commutes_check(code: GammaCyclicCode, gm: GrayMatrix) -> bool:
    """phi(C)^perp and phi(C^perp) have equal row spaces."""
    left = gray_image_generator(code, gm).kernel()
    right = gray_image_of_dual(code, gm)
    return left.row_space_equal(right)

"""Dense matrices over F_q stored as numpy integer-code arrays, with exact elimination."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, SpecMismatch
from .gf import FieldSpec


class FqMatrix:
    """Immutable-by-convention matrix of field codes."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec, array):
        self.field = field
        a = np.asarray(array, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        self.a = a

    @classmethod
    def from_rows(cls, field, rows, ncols=None) -> "FqMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(field, np.zeros((0, ncols or 0), dtype=np.int64))
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, field, r, c) -> "FqMatrix":
        return cls(field, np.zeros((r, c), dtype=np.int64))

    @classmethod
    def identity(cls, field, n) -> "FqMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def shape(self):
        return self.a.shape

    @property
    def nrows(self):
        return self.a.shape[0]

    @property
    def ncols(self):
        return self.a.shape[1]

    def rows(self) -> list[list[int]]:
        return self.a.tolist()

    def __eq__(self, other):
        return (
            isinstance(other, FqMatrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"FqMatrix({self.nrows}x{self.ncols} over F_{self.field.q})"

    def format(self) -> str:
        f = self.field
        return "\n".join(" ".join(f.format(int(v)) for v in row) for row in self.a)

    def _check(self, other: "FqMatrix"):
        if other.field != self.field:
            raise SpecMismatch("matrices over different fields")

    # ----- algebra -----------------------------------------------------------

    def T(self) -> "FqMatrix":
        return FqMatrix(self.field, self.a.T.copy())

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return FqMatrix(self.field, self.field.add_arr(self.a, other.a))

    def scale(self, c: int) -> "FqMatrix":
        return FqMatrix(self.field, self.field.mul_arr(self.a, c))

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        acc = np.zeros((self.nrows, other.ncols), dtype=np.int64)
        for i in range(self.ncols):
            col = self.a[:, i : i + 1]
            if not col.any():
                continue
            acc = f.add_arr(acc, f.mul_arr(col, other.a[i : i + 1, :]))
        return FqMatrix(f, acc)

    def is_zero(self) -> bool:
        return not self.a.any()

    def vstack(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.nrows == 0:
            return other
        if other.nrows == 0:
            return self
        if self.ncols != other.ncols:
            raise DimensionMismatch("column counts differ")
        return FqMatrix(self.field, np.vstack([self.a, other.a]))

    def hstack(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatch("row counts differ")
        return FqMatrix(self.field, np.hstack([self.a, other.a]))

    def columns(self, idx) -> "FqMatrix":
        return FqMatrix(self.field, self.a[:, list(idx)])

    # ----- elimination -------------------------------------------------------

    def rref(self) -> tuple["FqMatrix", list[int]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        f = self.field
        M = self.a.copy()
        nr, nc = M.shape
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            nz = np.nonzero(M[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                M[[r, pr]] = M[[pr, r]]
            inv = f.inv(int(M[r, c]))
            if inv != 1:
                M[r] = f.mul_arr(M[r], inv)
            colv = M[:, c].copy()
            colv[r] = 0
            rows = np.nonzero(colv)[0]
            if rows.size:
                factors = f.neg_arr(colv[rows]).reshape(-1, 1)
                M[rows] = f.add_arr(M[rows], f.mul_arr(factors, M[r].reshape(1, -1)))
            pivots.append(c)
            r += 1
        return FqMatrix(f, M[:r]), pivots

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return len(self.rref()[1])

    def kernel(self) -> "FqMatrix":
        """Basis (as rows) of {v : self @ v^T = 0}."""
        f = self.field
        n = self.ncols
        if self.nrows == 0:
            return FqMatrix.identity(f, n)
        R, piv = self.rref()
        free = [c for c in range(n) if c not in set(piv)]
        out = np.zeros((len(free), n), dtype=np.int64)
        for i, fc in enumerate(free):
            out[i, fc] = 1
            if piv:
                out[i, piv] = f.neg_arr(R.a[:, fc])
        return FqMatrix(f, out)

    def row_space_contains(self, other: "FqMatrix") -> bool:
        """Every row of ``other`` lies in the row space of self."""
        self._check(other)
        if other.nrows == 0:
            return True
        return self.rank() == self.vstack(other).rank()

    def row_space_equal(self, other: "FqMatrix") -> bool:
        r1 = self.rank()
        return r1 == other.rank() and r1 == self.vstack(other).rank()

    def contains_vector(self, v) -> bool:
        return self.row_space_contains(FqMatrix(self.field, np.asarray(v, dtype=np.int64).reshape(1, -1)))

    def independent_columns(self) -> list[int]:
        """Lexicographically first maximal independent set of columns."""
        return self.rref()[1]

    def row_basis(self) -> "FqMatrix":
        return self.rref()[0]

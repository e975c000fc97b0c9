import itertools

import numpy as np
import pytest

from orecode.codes import build_gamma_code, parity_basis
from orecode.config import data_path, load_config
from orecode.errors import DimensionMismatch, GrayMatrixError
from orecode.gf import GF, DerivationSpec
from orecode.graymap import (
    GrayMatrix,
    duality_commutes_check,
    gray_apply,
    gray_image_generator,
    gray_image_of_dual,
)
from orecode.linalg import FqMatrix
from orecode.rqs import RqsSpec

ROWS = {r.label: r for r in load_config(data_path("examples.cfg")).rows + load_config(data_path("code_table.cfg")).rows}


def gamma_code(label):
    row = ROWS[label]
    f = GF(row.q, row.modulus)
    S = RqsSpec(f, row.s, DerivationSpec(f, row.theta_power, f.parse(row.beta).value))
    return build_gamma_code(S, row.n, row.generators), GrayMatrix.parse(row.gray_matrix, f)


def schoolbook_ggt(f, G):
    n = G.shape[0]
    out = [[0] * n for _ in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        out[i][j] = f.add(out[i][j], f.mul(int(G[i, k]), int(G[j, k])))
    return out


def test_identity_gray_map_flattens():
    f = GF(8)
    S = RqsSpec(f, 3, DerivationSpec(f, 1, 2))
    gm = GrayMatrix.identity(f, 4)
    vec = [S.element([1, 2, 3, 4]), S.element([5, 6, 7, 0])]
    assert gray_apply(vec, gm) == [1, 2, 3, 4, 5, 6, 7, 0]


@pytest.mark.parametrize("label,c", [("example-F8-n30", "1"), ("example-F25-n20", "4"), ("(60,4)", "w")])
def test_shipped_gray_matrices_scalar(label, c):
    _, gm = gamma_code(label)
    f = gm.field
    assert gm.c_G == f.parse(c).value
    GG = schoolbook_ggt(f, gm.G.a)
    for i, j in itertools.product(range(gm.size), repeat=2):
        assert GG[i][j] == (gm.c_G if i == j else 0)


@pytest.mark.parametrize("label", sorted(r.label for r in ROWS.values() if r.gray_matrix))
def test_image_dimensions_and_orthogonality(label):
    code, gm = gamma_code(label)
    M = gray_image_generator(code, gm)
    D = gray_image_of_dual(code, gm)
    assert M.shape == (code.k_total, (code.rqs.s + 1) * code.n)
    assert M.rank() == code.k_total
    assert D.rank() == M.ncols - code.k_total
    # distinct components are orthogonal after the map, so phi(C^perp) is orthogonal to phi(C)
    assert (M @ D.T()).is_zero()
    assert duality_commutes_check(code, gm)


def test_linearity_and_injectivity():
    f = GF(25)
    S = RqsSpec(f, 3, DerivationSpec(f, 1, 1))
    gm = GrayMatrix.parse("4 1 1 1; 1 1 1 4; 1 4 1 1; 1 1 4 1", f)
    rng = np.random.default_rng(25)
    seen = {}
    for _ in range(300):
        a = [S.element(rng.integers(0, 25, size=4).tolist()) for _ in range(3)]
        b = [S.element(rng.integers(0, 25, size=4).tolist()) for _ in range(3)]
        lam = int(rng.integers(0, 25))
        lhs = gray_apply([x + S.element([lam] * 4) * y for x, y in zip(a, b)], gm)
        ia, ib = gray_apply(a, gm), gray_apply(b, gm)
        assert lhs == [f.add(u, f.mul(lam, v)) for u, v in zip(ia, ib)]
        key = tuple(ia)
        assert seen.setdefault(key, tuple(x.crt for x in a)) == tuple(x.crt for x in a)


def test_orthogonality_transport():
    f = GF(9)
    S = RqsSpec(f, 2, DerivationSpec(f, 1, 1))
    gm = GrayMatrix.parse("1 1 w^2; w w^7 1; w^7 w 1", f)
    rng = np.random.default_rng(9)

    def dot(u, v):
        acc = 0
        for x, y in zip(u, v):
            acc = f.add(acc, f.mul(x, y))
        return acc

    for _ in range(200):
        a = [S.element(rng.integers(0, 9, size=3).tolist()) for _ in range(4)]
        b = [S.element(rng.integers(0, 9, size=3).tolist()) for _ in range(4)]
        prod = S.zero()
        for x, y in zip(a, b):
            prod = prod + x * y
        # <phi(a), phi(b)> = c_G * sum_i (a.b)_i over the CRT components
        total = 0
        for c in prod.crt:
            total = f.add(total, c)
        assert dot(gray_apply(a, gm), gray_apply(b, gm)) == f.mul(gm.c_G, total)


def test_rejections():
    f = GF(4)
    with pytest.raises(GrayMatrixError):
        GrayMatrix.from_matrix(FqMatrix.from_rows(f, [[1, 1], [0, 1]]))
    with pytest.raises(GrayMatrixError):
        GrayMatrix.from_matrix(FqMatrix.from_rows(f, [[1, 1], [1, 1]]))
    with pytest.raises(GrayMatrixError):
        GrayMatrix.from_matrix(FqMatrix.from_rows(f, [[1, 0, 1]]))
    code, gm = gamma_code("example-F8-n30")
    with pytest.raises(DimensionMismatch):
        gray_image_generator(code, GrayMatrix.identity(gm.field, 3))


def test_full_component_gives_zero_dual_block():
    f = GF(8)
    S = RqsSpec(f, 1, DerivationSpec(f, 1, 2))
    code = build_gamma_code(S, 6, ["1", "1"])
    gm = GrayMatrix.identity(f, 2)
    assert gray_image_generator(code, gm).rank() == 12
    assert gray_image_of_dual(code, gm).nrows == 0
    assert parity_basis(code.components[0]).nrows == 0

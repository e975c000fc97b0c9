import itertools

import numpy as np
import pytest

from orecode.css import (
    PauliVector,
    build_css,
    build_syndrome_table,
    coset_count,
    decode_basis_error,
    expand_check_matrix,
    hamming7_css,
    quantum_params,
    symplectic_syndrome,
    verify_operator_algebra,
    x_operator,
    z_operator,
)
from orecode.errors import BudgetExceeded, DimensionMismatch, InvalidParameters, NotDualContaining, NotPrimitive
from orecode.gf import GF
from orecode.linalg import FqMatrix

F4 = GF(4)
W = F4.gen.value
W2 = F4.exp(2)


def f4_css():
    # 1 + w^2 + w^4 = 0, so each row is self-orthogonal and the two rows have disjoint support
    H = FqMatrix.from_rows(F4, [[1, W, W2, 0, 0, 0], [0, 0, 0, 1, W, W2]])
    return build_css(H, H)


def test_quantum_params_examples():
    p = quantum_params(120, 114, 4, 8)
    assert (p.n_q, p.k_q, p.d_q) == (120, 108, 4) and str(p) == "[[120,108,4]]_8"
    assert p.singleton_slack == 120 + 2 - 108 - 8
    assert str(quantum_params(7, 4, 3, 2)) == "[[7,1,3]]_2"
    with pytest.raises(InvalidParameters):
        quantum_params(7, 3, 3, 2)


def test_coset_count():
    assert coset_count(7, 4, 4, 2, 1) == 2
    assert coset_count(120, 114, 114, 2, 3) == 8**108
    with pytest.raises(InvalidParameters):
        coset_count(7, 3, 3, 2, 1)


def test_build_css_shapes_and_rejection():
    css = hamming7_css()
    assert css.check_matrix.shape == (6, 14) and css.stabilizer_count == 6
    assert css.k_quantum == 1
    bad = FqMatrix.from_rows(GF(2), [[1, 0, 0, 0, 0, 0, 0]])
    with pytest.raises(NotDualContaining):
        build_css(bad, bad)
    with pytest.raises(DimensionMismatch):
        build_css(css.H1, FqMatrix.from_rows(GF(2), [[1, 1]]))


def test_expansion():
    css = hamming7_css()
    assert expand_check_matrix(css, GF(2).gen) == css.check_matrix
    e = f4_css()
    X = expand_check_matrix(e, F4.gen)
    assert X.nrows == 2 * e.check_matrix.nrows
    assert X.a[2].tolist() == F4.mul_arr(W, e.H1.a[0]).tolist() + [0] * 6
    with pytest.raises(NotPrimitive):
        expand_check_matrix(e, 1)
    f16 = GF(16)
    with pytest.raises(NotPrimitive):
        expand_check_matrix(build_css(FqMatrix.zeros(f16, 0, 3), FqMatrix.zeros(f16, 0, 3)), f16.exp(3))


def test_syndrome_linearity_over_f4():
    css = f4_css()
    rng = np.random.default_rng(4)
    for _ in range(200):
        e1 = PauliVector(F4, tuple(rng.integers(0, 4, size=6).tolist()), tuple(rng.integers(0, 4, size=6).tolist()))
        e2 = PauliVector(F4, tuple(rng.integers(0, 4, size=6).tolist()), tuple(rng.integers(0, 4, size=6).tolist()))
        s1, s2, s12 = css.full_syndrome(e1), css.full_syndrome(e2), css.full_syndrome(e1 + e2)
        assert s12 == tuple((x + y) % 2 for x, y in zip(s1, s2))


def test_x_error_gives_negated_h2_column():
    f3 = GF(3)
    H = FqMatrix.from_rows(f3, [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]])
    css = build_css(H, H)
    for j in range(6):
        a = [0] * 6
        a[j] = 1
        syn = css.syndrome(PauliVector(f3, tuple(a), (0,) * 6))
        assert syn[:2] == (0, 0)
        assert list(syn[2:]) == f3.neg_arr(H.a[:, j]).tolist()
    h = hamming7_css()
    for j in range(7):
        a = [0] * 7
        a[j] = 1
        assert list(h.syndrome(PauliVector(GF(2), tuple(a), (0,) * 7))[3:]) == h.H2.a[:, j].tolist()


def test_symplectic_syndrome_dimension_check():
    with pytest.raises(DimensionMismatch):
        symplectic_syndrome(hamming7_css().check_matrix, PauliVector.zero(GF(2), 5))


@pytest.mark.parametrize("use_table", [True, False])
def test_single_errors_roundtrip_hamming(use_table):
    css = hamming7_css()
    f = css.field
    if use_table:
        assert build_syndrome_table(css, 1)
    for j, (x, z) in itertools.product(range(7), [(1, 0), (0, 1), (1, 1)]):
        a, b = [0] * 7, [0] * 7
        a[j], b[j] = x, z
        e = PauliVector(f, tuple(a), tuple(b))
        assert decode_basis_error(css, css.full_syndrome(e)) == e


def test_weight_two_does_not_crash():
    css = hamming7_css()
    f = css.field
    build_syndrome_table(css, 1)
    e = PauliVector(f, (1, 1, 0, 0, 0, 0, 0), (0,) * 7)
    got = decode_basis_error(css, css.full_syndrome(e))
    assert got is None or (got != e and css.full_syndrome(got) == css.full_syndrome(e))


def test_table_limit():
    css = f4_css()
    assert not build_syndrome_table(css, 3, limit=100)
    assert build_syndrome_table(css, 1)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 3)])
def test_operator_algebra(p, m):
    rep = verify_operator_algebra(p, m)
    assert rep.passed() and rep.count == (p**m) ** 2


def test_operator_identities_and_limit():
    f = GF(9)
    assert np.allclose(x_operator(f, 0), np.eye(9))
    assert np.allclose(z_operator(f, 0), np.eye(9))
    P = x_operator(f, 5)
    assert (P.sum(axis=0) == 1).all() and (P.sum(axis=1) == 1).all()
    with pytest.raises(BudgetExceeded):
        verify_operator_algebra(17, 1)

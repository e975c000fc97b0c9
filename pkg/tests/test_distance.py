import itertools

import numpy as np
import pytest

from orecode.css import hamming7_parity
from orecode.distance import (
    classify_bound,
    min_distance,
    min_distance_columns,
    min_distance_exhaustive,
)
from orecode.errors import BudgetExceeded, Inconclusive, InvalidParameters
from orecode.gf import GF
from orecode.linalg import FqMatrix


def brute_distance(f, G):
    best = None
    for msg in itertools.product(range(f.q), repeat=G.nrows):
        if not any(msg):
            continue
        v = np.zeros(G.ncols, dtype=np.int64)
        for c, r in zip(msg, G.a):
            v = f.add_arr(v, f.mul_arr(c, r))
        w = int(np.count_nonzero(v))
        if w and (best is None or w < best):
            best = w
    return best


def test_identity_hamming_repetition():
    f2 = GF(2)
    assert min_distance_exhaustive(FqMatrix.identity(GF(5), 4)).d == 1
    H = hamming7_parity()
    rep = min_distance_columns(H)
    assert rep.d == 3 and rep.lower_bound_certified == 2
    assert len(rep.support) == 3
    assert not (H @ FqMatrix(f2, np.array(rep.witness).reshape(-1, 1))).a.any()
    assert min_distance_exhaustive(H.kernel()).d == 3
    R = FqMatrix.from_rows(GF(3), [[1] * 9])
    assert min_distance_exhaustive(R).d == 9
    assert min_distance_columns(R).d == 2  # R is a parity check of the [9,8,2] code


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_methods_agree_on_random_small_codes(q):
    f = GF(q)
    rng = np.random.default_rng(100 + q)
    for _ in range(12):
        n = int(rng.integers(3, 9))
        k = int(rng.integers(1, min(n, 4 if q < 5 else 3) + 1))
        G = FqMatrix(f, rng.integers(0, q, size=(k, n)))
        if G.rank() == 0:
            continue
        brute = brute_distance(f, G)
        assert min_distance_exhaustive(G).d == brute
        H = G.kernel()
        try:
            col = min_distance_columns(H, w_max=8)
        except Inconclusive:
            continue
        assert col.d == brute
        assert col.lower_bound_certified == brute - 1
        assert min_distance(gen=G, method="columns", w_max=8).d == brute
        assert min_distance(gen=G).d == brute
        assert brute <= n - G.rank() + 1


def test_zero_column_gives_distance_one():
    f = GF(7)
    H = FqMatrix.from_rows(f, [[1, 0, 2, 3], [4, 0, 1, 1]])
    rep = min_distance_columns(H)
    assert rep.d == 1 and rep.support == (1,)


def test_full_space_and_errors():
    f = GF(4)
    rep = min_distance_columns(FqMatrix.zeros(f, 0, 5))
    assert rep.d == 1
    with pytest.raises(BudgetExceeded):
        min_distance_columns(hamming7_parity(), w_max=9)
    with pytest.raises(InvalidParameters):
        min_distance_exhaustive(FqMatrix.zeros(f, 1, 4))
    with pytest.raises(InvalidParameters):
        min_distance(gen=FqMatrix.identity(f, 2), method="magic")


def test_inconclusive_reports_bound():
    f = GF(2)
    # [7,1,7] repetition: fewer than 7 columns of its parity check are always independent
    H = FqMatrix.from_rows(f, [[1] * 7]).kernel()
    with pytest.raises(Inconclusive) as ei:
        min_distance_columns(H, w_max=4)
    assert ei.value.w_max == 4 and ei.value.lower_bound == 4


def test_classify_bound():
    c = classify_bound(120, 114, 4)
    assert (c.kind, c.slack) == ("neither", 3)
    assert classify_bound(7, 4, 4).kind == "MDS"
    assert classify_bound(7, 4, 3).kind == "almost-MDS"
    with pytest.raises(InvalidParameters):
        classify_bound(7, 4, 5)
    with pytest.raises(InvalidParameters):
        classify_bound(7, 0, 1)

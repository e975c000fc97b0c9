"""Minimum Hamming distance: exhaustive enumeration and parity-check column search.

The column search finds the least w for which some w columns of H are
linearly dependent.  Weights are tried in increasing order, so when weight w
is examined every smaller set of columns is already known to be independent.
A dependence of weight w with all coefficients nonzero is then found by
meet-in-the-middle: split it into a left part on L = w // 2 columns and a
right part on R = w - L columns, scale both to have leading coefficient 1,
normalise the resulting syndromes projectively and look for a collision.
Because all lighter sets are independent, any collision between two distinct
table entries yields a dependence supported on exactly w columns.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BudgetExceeded, Inconclusive, InvalidParameters
from .linalg import FqMatrix

EXHAUSTIVE_BUDGET = 1 << 22
TABLE_BUDGET = 40_000_000  # total field entries held in one search table
W_MAX_CAP = 8


@dataclass
class DistanceReport:
    """lower_bound_certified is the largest w for which no w columns of H are dependent (so d - 1)."""

    d: int
    method: str
    lower_bound_certified: int
    witness: list = dc_field(default_factory=list)
    support: tuple = ()

    def as_dict(self):
        return {
            "d": self.d,
            "method": self.method,
            "certified_lower_bound": self.lower_bound_certified,
            "witness": list(self.support) if self.support else self.witness,
        }


def _weight(v) -> int:
    return int(np.count_nonzero(v))


def min_distance_exhaustive(gen: FqMatrix, budget: int = EXHAUSTIVE_BUDGET) -> DistanceReport:
    """Least nonzero weight over all q^k messages."""
    f = gen.field
    G = gen.row_basis()
    k, n = G.shape
    if k == 0:
        raise InvalidParameters("zero code has no minimum distance")
    if f.q**k > budget:
        raise BudgetExceeded(f"q^k = {f.q}^{k} exceeds exhaustive budget {budget}")
    # split rows into a precomputed table (head) and an outer loop (tail)
    head = min(k, max(1, int(math.log(1 << 14, f.q))))
    table = np.zeros((1, n), dtype=np.int64)
    for i in range(head):
        table = np.concatenate([f.add_arr(table, f.mul_arr(c, G.a[i])) for c in range(f.q)])
    best = n + 1
    best_word = None
    tail_rows = G.a[head:]
    for msg in itertools.product(range(f.q), repeat=k - head):
        offset = np.zeros(n, dtype=np.int64)
        for c, row in zip(msg, tail_rows):
            if c:
                offset = f.add_arr(offset, f.mul_arr(c, row))
        words = f.add_arr(table, offset)
        wts = np.count_nonzero(words, axis=1)
        if not any(msg):
            wts[0] = n + 1
        j = int(np.argmin(wts))
        if wts[j] < best:
            best = int(wts[j])
            best_word = words[j].tolist()
    return DistanceReport(best, "exhaustive", best - 1, best_word, tuple(i for i, v in enumerate(best_word) if v))


def _normalise(f, V: np.ndarray):
    """Scale each row so its first nonzero entry is 1; returns (rows, scale, zero_mask)."""
    nz = V != 0
    has = nz.any(axis=1)
    first = np.argmax(nz, axis=1)
    lead = V[np.arange(V.shape[0]), first]
    lead = np.where(has, lead, 1)
    inv = f.inv_arr(lead)
    return f.mul_arr(V, inv[:, None]), lead, ~has


def _table(f, Hc: np.ndarray, size: int, lead_one: bool):
    """All combinations of ``size`` columns with nonzero coefficients.

    Returns (keys, subsets, coeffs, leads) with keys the projectively normalised
    syndromes.  When lead_one the first coefficient is fixed to 1.
    """
    n, r = Hc.shape
    units = np.arange(1, f.q, dtype=np.int64)
    subsets = np.array(list(itertools.combinations(range(n), size)), dtype=np.int64).reshape(-1, size)
    free = size - 1 if lead_one else size
    coeff_list = list(itertools.product(units.tolist(), repeat=free))
    if lead_one:
        coeff_list = [(1,) + c for c in coeff_list]
    coeffs = np.array(coeff_list, dtype=np.int64).reshape(-1, size)
    ns, nc = subsets.shape[0], coeffs.shape[0]
    if ns * nc * max(r, 1) > TABLE_BUDGET:
        raise BudgetExceeded(f"search table of {ns * nc} entries x {r} rows exceeds budget")
    out = np.zeros((nc, ns, r), dtype=np.int64)
    for ci in range(nc):
        acc = np.zeros((ns, r), dtype=np.int64)
        for pos in range(size):
            acc = f.add_arr(acc, f.mul_arr(coeffs[ci, pos], Hc[subsets[:, pos]]))
        out[ci] = acc
    V = out.reshape(nc * ns, r)
    keys, leads, zero = _normalise(f, V)
    sub_idx = np.tile(np.arange(ns), nc)
    coef_idx = np.repeat(np.arange(nc), ns)
    return keys, subsets[sub_idx], coeffs[coef_idx], leads, zero


def _as_void(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a.astype(np.int32))
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).reshape(-1)


def _search_weight(f, Hc: np.ndarray, w: int):
    """A dependence (support, coefficients) on exactly w columns, or None."""
    n, r = Hc.shape
    if w == 1:
        zero = np.nonzero(~Hc.any(axis=1))[0]
        if zero.size:
            return (int(zero[0]),), (1,)
        return None
    L = w // 2
    R = w - L
    lk, ls, lc, ll, lz = _table(f, Hc, L, True)
    if L == R:
        keys, subs, cfs, leads = lk, ls, lc, ll
        side = np.zeros(len(lk), dtype=np.int8)
    else:
        rk, rs, rc, rl, rz = _table(f, Hc, R, True)
        keys = np.concatenate([lk, rk])
        subs = [ls, rs]
        cfs = [lc, rc]
        leads = np.concatenate([ll, rl])
        side = np.concatenate([np.zeros(len(lk), np.int8), np.ones(len(rk), np.int8)])
    vk = _as_void(keys)
    order = np.argsort(vk, kind="stable")
    sk = vk[order]
    eq = np.nonzero(sk[1:] == sk[:-1])[0]
    for e in eq:
        a, b = int(order[e]), int(order[e + 1])
        if L != R and side[a] == side[b]:
            continue  # same-size collisions would be lighter dependences; none exist
        cand = _combine(f, Hc, a, b, L, R, subs, cfs, leads, side)
        if cand is not None:
            return cand
    return None


def _combine(f, Hc, a, b, L, R, subs, cfs, leads, side):
    def entry(i):
        if L == R:
            return subs[i], cfs[i], leads[i]
        s = int(side[i])
        off = 0 if s == 0 else len(subs[0])
        return subs[s][i - off], cfs[s][i - off], leads[i]

    sa, ca, la = entry(a)
    sb, cb, lb = entry(b)
    # sum_a ca*h = la * key and sum_b cb*h = lb * key, so lb*sum_a - la*sum_b = 0
    coeff = {}
    for j, c in zip(sa.tolist(), ca.tolist()):
        coeff[j] = f.add(coeff.get(j, 0), f.mul(int(lb), c))
    for j, c in zip(sb.tolist(), cb.tolist()):
        coeff[j] = f.sub(coeff.get(j, 0), f.mul(int(la), c))
    support = tuple(sorted(j for j, c in coeff.items() if c))
    if not support:
        return None
    vals = tuple(coeff[j] for j in support)
    acc = np.zeros(Hc.shape[1], dtype=np.int64)
    for j, c in zip(support, vals):
        acc = f.add_arr(acc, f.mul_arr(c, Hc[j]))
    if acc.any():  # pragma: no cover - algebraic certainty
        raise AssertionError("collision did not give a dependence")
    return support, vals


def min_distance_columns(parity: FqMatrix, w_max: int = 6) -> DistanceReport:
    """Least number of linearly dependent columns of ``parity``."""
    if w_max > W_MAX_CAP:
        raise BudgetExceeded(f"w_max {w_max} above cap {W_MAX_CAP}")
    f = parity.field
    n = parity.ncols
    H = parity.row_basis()
    if H.nrows == 0:
        return DistanceReport(1, "column-search", 0, [1] + [0] * (n - 1), (0,))
    Hc = H.a.T.copy()  # one row per column of H
    for w in range(1, min(w_max, n) + 1):
        found = _search_weight(f, Hc, w)
        if found is not None:
            support, vals = found
            word = [0] * n
            for j, c in zip(support, vals):
                word[j] = c
            return DistanceReport(w, "column-search", w - 1, word, support)
    if w_max >= H.nrows + 1:  # pragma: no cover - any r+1 columns are dependent
        raise AssertionError("rank bound violated")
    raise Inconclusive(w_max, w_max)


def min_distance(gen: FqMatrix | None = None, parity: FqMatrix | None = None, method: str = "auto", w_max: int = 6):
    if method not in ("auto", "exhaustive", "columns"):
        raise InvalidParameters(f"unknown method {method}")
    if parity is None and gen is not None:
        parity = gen.kernel()
    if gen is None and parity is not None:
        gen = parity.kernel()
    if method == "exhaustive" or (method == "auto" and gen.field.q ** gen.rank() <= 1 << 16):
        return min_distance_exhaustive(gen)
    return min_distance_columns(parity, w_max)


@dataclass
class BoundClass:
    kind: str
    slack: int


def classify_bound(n: int, k: int, d: int) -> BoundClass:
    if not (0 < k <= n) or d < 1:
        raise InvalidParameters(f"invalid parameters ({n},{k},{d})")
    slack = n - k + 1 - d
    if slack < 0:
        raise InvalidParameters(f"({n},{k},{d}) violates the Singleton bound")
    kind = "MDS" if slack == 0 else "almost-MDS" if slack == 1 else "neither"
    return BoundClass(kind, slack)

"""Skew multiplication is checked against a naive oracle that expands products
term by term with x*b = theta(b)*x + D(b), written here independently of the library."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orecode.errors import NotAFactor, RingTagMismatch, ZeroDivisor
from orecode.gf import GF, DerivationSpec
from orecode.skewpoly import (
    NEG_INF,
    SkewRing,
    is_central,
    left_divmod,
    monomial_times_scalar,
    right_divides,
    right_divmod,
    skew_mul,
    two_sided_factor_check,
)

CONFIGS = [(4, 1, "w"), (8, 1, "w"), (9, 1, "w^2"), (25, 1, "w"), (49, 1, "w^2"), (27, 2, "w"), (16, 3, "1")]


def ring(q, t=1, beta="0"):
    f = GF(q)
    return SkewRing(f, DerivationSpec(f, t, f.parse(beta).value))


def naive_mul(R, a, b):
    """sum_i a_i x^i * sum_j b_j x^j with x^i b_j expanded one x at a time."""
    f = R.field
    d = R.derivation
    out = [0] * (len(a.coeffs) + len(b.coeffs))
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            # x^i * bj as a dense list, then shifted by j and scaled by ai on the left
            poly = [bj]
            for _ in range(i):
                nxt = [0] * (len(poly) + 1)
                for k, c in enumerate(poly):
                    nxt[k + 1] = f.add(nxt[k + 1], d.theta(c))
                    nxt[k] = f.add(nxt[k], d.derive(c))
                poly = nxt
            for k, c in enumerate(poly):
                out[k + j] = f.add(out[k + j], f.mul(ai, c))
    return R.poly(out)


def rand_poly(R, rng, max_deg):
    deg = int(rng.integers(-1, max_deg + 1))
    return R.poly(rng.integers(0, R.field.q, size=deg + 1).tolist() if deg >= 0 else [])


def test_x_times_w_f8():
    R = ring(8, 1, "w")
    assert skew_mul(R.x(), R.parse("w")) == R.parse("w^2*x + w^5")


@pytest.mark.parametrize("q,t,beta", CONFIGS)
def test_mul_matches_naive_oracle(q, t, beta):
    R = ring(q, t, beta)
    rng = np.random.default_rng(q + t)
    for _ in range(150):
        a, b = rand_poly(R, rng, 7), rand_poly(R, rng, 7)
        assert skew_mul(a, b) == naive_mul(R, a, b)


def test_commutative_degeneration_schoolbook():
    R = ring(9, 0, "0")
    f = R.field
    rng = np.random.default_rng(0)
    for _ in range(500):
        a, b = rand_poly(R, rng, 8), rand_poly(R, rng, 8)
        out = [0] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            for j, y in enumerate(b.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
        assert skew_mul(a, b) == R.poly(out) == skew_mul(b, a)


@pytest.mark.parametrize("q,t,beta", CONFIGS)
def test_associativity_distributivity_degree(q, t, beta):
    R = ring(q, t, beta)
    rng = np.random.default_rng(q * 7)
    for _ in range(500):
        a, b, c = (rand_poly(R, rng, 5) for _ in range(3))
        assert skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c))
        assert skew_mul(a, b + c) == skew_mul(a, b) + skew_mul(a, c)
        assert skew_mul(a + b, c) == skew_mul(a, c) + skew_mul(b, c)
        if not a.is_zero() and not b.is_zero():
            assert skew_mul(a, b).degree == a.degree + b.degree


def test_monomial_times_scalar():
    R = ring(8, 1, "w")
    f, d = R.field, R.derivation
    w = f.gen.value
    assert monomial_times_scalar(0, w, R) == R.constant(w)
    assert monomial_times_scalar(1, w, R) == R.poly([d.derive(w), d.theta(w)])
    p5 = monomial_times_scalar(5, w, R)
    th, de = w, w
    for _ in range(5):
        th, de = d.theta(th), d.derive(de)
    assert p5.lead == th and p5.coeffs[0] == de
    for n in range(0, 65, 7):
        assert monomial_times_scalar(n, w, R) == skew_mul(R.monomial(n), R.constant(w))


@pytest.mark.parametrize("q,t,beta", CONFIGS)
def test_division_uniqueness_by_perturbation(q, t, beta):
    R = ring(q, t, beta)
    rng = np.random.default_rng(q + 11)
    for _ in range(200):
        F = rand_poly(R, rng, 12)
        G = rand_poly(R, rng, 5)
        if G.is_zero():
            continue
        Q, Rm = right_divmod(F, G)
        assert skew_mul(Q, G) + Rm == F and Rm.degree < G.degree
        E = rand_poly(R, rng, 3)
        if not E.is_zero():
            alt = F - skew_mul(Q + E, G)
            assert alt.degree >= G.degree
        Ql, Rl = left_divmod(F, G)
        assert skew_mul(G, Ql) + Rl == F and Rl.degree < G.degree


def test_division_base_cases_and_errors():
    R = ring(8, 1, "w")
    f = R.parse("x + w")
    g = R.parse("x^3 + 1")
    assert right_divmod(f, g) == (R.zero(), f)
    with pytest.raises(ZeroDivisor):
        right_divmod(f, R.zero())
    with pytest.raises(RingTagMismatch):
        skew_mul(f, ring(8, 1, "0").x())
    assert R.zero().degree == NEG_INF


def test_f8_n30_factors():
    R = ring(8, 1, "w")
    xn = R.x_pow_minus_one(30)
    g0 = R.parse("w^2*x + 1")
    Q, Rm = right_divmod(xn, g0)
    assert Rm.is_zero() and skew_mul(Q, g0) == xn
    assert right_divides(R.parse("w*x^2 + w^4*x + w^6"), xn)
    assert right_divides(xn, xn)
    rng = np.random.default_rng(3)
    misses = 0
    for _ in range(50):
        g = R.poly(rng.integers(0, 8, size=2).tolist() + [1])
        if not right_divides(g, xn):
            misses += 1
            assert not right_divmod(xn, g)[1].is_zero()
    assert misses > 25


def test_two_sided_factor_check():
    R = ring(25, 1, "w")
    xn = R.x_pow_minus_one(20)
    g0 = R.parse("w*x + w^17")
    h, hp = two_sided_factor_check(g0, 20)
    assert skew_mul(h, g0) == xn == skew_mul(g0, hp)
    assert two_sided_factor_check(xn, 20) == (R.one(), R.one())
    with pytest.raises(NotAFactor):
        two_sided_factor_check(R.parse("x + w"), 20)


def test_is_central():
    R = ring(8, 1, "w")
    assert is_central(R.one())
    assert is_central(R.constant(1))
    assert not is_central(R.x())
    C = ring(8, 0, "0")
    assert is_central(C.x())


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 8), max_size=8), st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_hypothesis_division_f9(fc, gc):
    R = ring(9, 1, "w^2")
    G = R.poly(gc)
    if G.is_zero():
        return
    F = R.poly(fc)
    Q, Rm = right_divmod(F, G)
    assert skew_mul(Q, G) + Rm == F and Rm.degree < G.degree

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import horner
from quintic.polyring import Poly, geom_chunks, geom_eval, multieval_tree, poly_mul, product_tree, subproduct_tree
from quintic.stats import RunStats

moduli = st.sampled_from([2, 7, 15, 77, 1000, 10**6 + 3, 10**9 + 7, 2**61 - 1, 3 * 5 * 7 * 11 * 13 * 17])


def naive_mul(f, g, n):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % n
    return out


def test_mul_examples():
    assert poly_mul(Poly((1, 1), 5), Poly((1, 1), 5)).coeffs == (1, 2, 1)
    f = Poly((3, 0, 4), 11)
    assert (f * Poly((1,), 11)) == f
    assert poly_mul(Poly((3, 1), 7), Poly((4, 1), 7)).coeffs == (5, 0, 1)


def test_mul_modulus_mismatch():
    with pytest.raises(ValueError):
        poly_mul(Poly((1,), 5), Poly((1,), 7))


def test_modulus_too_small():
    with pytest.raises(ValueError):
        Poly((1,), 1)


@given(moduli, st.lists(st.integers(0, 1 << 70), min_size=1, max_size=90), st.lists(st.integers(0, 1 << 70), min_size=1, max_size=90))
def test_mul_matches_schoolbook(n, f, g):
    expect = naive_mul(f, g, n)
    while len(expect) > 1 and expect[-1] == 0:
        expect.pop()
    assert poly_mul(Poly(f, n), Poly(g, n)).coeffs == tuple(expect)


def test_add():
    assert (Poly((1, 2, 3), 7) + Poly((6, 5, 4), 7)).coeffs == (0,)


def test_product_tree_examples():
    assert product_tree([], 7).coeffs == (1,)
    assert product_tree([3], 7).coeffs == (4, 1)
    assert product_tree([1, 2], 7).coeffs == (2, 4, 1)


@given(moduli, st.lists(st.integers(0, 10**12), max_size=40), st.integers(0, 10**12))
def test_product_tree_roots(n, points, x):
    f = product_tree(points, n)
    assert f.degree == (len(points) if n > 1 else 0)
    expect = 1
    for v in points:
        expect = expect * (x - v) % n
    assert f(x) == expect


def test_subproduct_tree_root_is_product():
    pts = list(range(1, 12))
    tree = subproduct_tree(pts, 101)
    assert tuple(tree[-1][0]) == product_tree(pts, 101).coeffs


def test_geom_eval_examples():
    assert geom_eval(Poly((0, 1), 7), 2, 3) == [1, 2, 4]
    assert geom_eval(Poly((5,), 7), 3, 4) == [5, 5, 5, 5]
    rng = random.Random(1)
    n = 10**6 + 3
    f = [rng.randrange(n) for _ in range(51)]
    alpha = rng.randrange(2, n)
    assert geom_eval(Poly(f, n), alpha, 80) == [horner(f, pow(alpha, i, n), n) for i in range(80)]


@settings(max_examples=60, deadline=None)
@given(moduli, st.lists(st.integers(0, 1 << 64), min_size=1, max_size=70), st.integers(1, 1 << 64), st.integers(1, 200))
def test_geom_eval_matches_horner(n, f, alpha, kappa):
    from math import gcd

    if gcd(alpha, n) != 1:
        alpha = 1
    got = geom_eval(Poly(f, n), alpha, kappa)
    assert got == [horner(f, pow(alpha, i, n), n) for i in range(kappa)]


def test_geom_chunks_small_chunk():
    n = 10007
    f = Poly(list(range(1, 10)), n)
    got = []
    for i0, block in geom_chunks(f, 5, 100, chunk=8):
        assert i0 == len(got)
        got.extend(block)
    assert got == [f(pow(5, i, n)) for i in range(100)]


def test_geom_chunks_unit_scaled_preserves_gcds():
    # Without exactness each value is off by a unit, so gcds with n agree.
    from math import gcd

    n = 91
    f = product_tree([8, 27, 64], n)
    alpha = 3
    exact = geom_eval(f, alpha, 40)
    scaled = [v for _, blk in geom_chunks(f, alpha, 40, exact=False, chunk=4) for v in blk]
    assert [gcd(v, n) for v in scaled] == [gcd(v, n) for v in exact]


def test_multieval_examples():
    assert multieval_tree(Poly((0, 0, 1), 7), [0, 1, 2]) == [0, 1, 4]
    assert multieval_tree(Poly((3,), 7), [1, 5, 6]) == [3, 3, 3]
    rng = random.Random(2)
    n = 10**9 + 7
    f = [rng.randrange(n) for _ in range(65)]
    pts = [rng.randrange(n) for _ in range(64)]
    assert multieval_tree(Poly(f, n), pts) == [horner(f, x, n) for x in pts]


@settings(max_examples=60, deadline=None)
@given(moduli, st.lists(st.integers(0, 1 << 64), min_size=1, max_size=150), st.lists(st.integers(0, 1 << 64), max_size=120))
def test_multieval_matches_horner(n, f, pts):
    assert multieval_tree(Poly(f, n), pts) == [horner(f, x, n) for x in pts]


def test_stats_counted():
    s = RunStats()
    product_tree(list(range(16)), 101, s)
    assert s.modmul_count > 0

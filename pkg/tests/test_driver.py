import math
import random

import pytest
from sympy import factorint, integer_nthroot, isprime, primerange

from conftest import random_semiprime, trial_factor
from quintic.driver import (
    Factorization,
    SearchUnavailable,
    balance_target,
    choose_params,
    factor,
    factor_prime_or_semiprime,
    order_guard,
    pollard_strassen,
)
from quintic.outcomes import Factors, Prime
from quintic.stats import RunStats


def params_oracle(n):
    lgn = n.bit_length()
    B = lgn // 30
    m = math.prod(primerange(2, B + 1))
    phi = math.prod(r - 1 for r in primerange(2, B + 1))
    llg = lgn.bit_length()
    t = n * llg * llg // lgn ** 4
    r = integer_nthroot(t, 5)[0]
    m0 = max(1, -(-r // m))
    D, exact = integer_nthroot(n * n, 5)
    D += not exact
    return B, m, phi, m0, D


def test_params_2_1024():
    p = choose_params(2 ** 1024)
    assert p.B == 34 and p.m == 200560490130


def test_params_small():
    p = choose_params(2 ** 29 - 1)
    assert (p.B, p.m, p.phi_m) == (0, 1, 1)
    # from 2**29 on lg N = 30, so B = 1, still an empty primorial
    p = choose_params(2 ** 30 - 1)
    assert (p.B, p.m, p.phi_m) == (1, 1, 1)


@pytest.mark.parametrize("n", [10 ** 18, 2 ** 64, 2 ** 80 + 13, 2 ** 200 + 1, 3 ** 300])
def test_params_match_formula_oracle(n):
    p = choose_params(n)
    assert (p.B, p.m, p.phi_m, p.m0, p.D) == params_oracle(n)


def test_params_overrides():
    p = choose_params(10 ** 18, m0=5, smooth_bound=7)
    assert (p.m, p.phi_m, p.m0) == (210, 48, 5)
    with pytest.raises(ValueError):
        choose_params(1)
    with pytest.raises(ValueError):
        choose_params(100, m0=0)


def test_pollard_strassen_examples():
    assert pollard_strassen(91, 10) == 7
    assert pollard_strassen(101, 10) is None
    with pytest.raises(ValueError):
        pollard_strassen(1, 10)


def test_pollard_strassen_vs_trial():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randrange(2, 10 ** 9)
        bound = rng.randrange(2, 40000)
        smallest = trial_factor(n)[0][0]
        assert pollard_strassen(n, bound) == (smallest if smallest <= bound else None)
    n = (2 ** 64 + 1) // 274177
    assert pollard_strassen(2 ** 64 + 1, 10 ** 6) == 274177
    assert pollard_strassen(n, 10 ** 6) is None


def test_factor_examples():
    assert factor(12).factors == ((2, 2), (3, 1))
    assert factor(8051).factors == ((83, 1), (97, 1))
    big = 2 ** 64 - 59
    assert isprime(big)
    assert factor(big).factors == ((big, 1),)
    assert str(factor(8051)) == "8051 = 83 * 97"
    assert str(factor(12)) == "12 = 2^2 * 3"
    with pytest.raises(ValueError):
        factor(1)


@pytest.mark.parametrize("threshold", [0, 1 << 60])
def test_factor_range(threshold):
    for n in range(2, 3000):
        got = factor(n, fallback_threshold=threshold)
        assert got.factors == trial_factor(n), n
        assert got.product() == n


def test_factor_structured_inputs():
    cases = [
        2 ** 61,
        3 ** 40,
        (2 ** 31 - 1) ** 2,
        1009 ** 3 * 1013,
        3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41 * 43 * 47,
        (10 ** 6 + 3) * (10 ** 6 + 33) * (10 ** 6 + 37),
        (2 ** 31 - 1) * (2 ** 37 - 25),
    ]
    for n in cases:
        assert dict(factor(n, fallback_threshold=0).factors) == factorint(n)


def test_factor_prime_or_semiprime_examples():
    assert factor_prime_or_semiprime(8051) == Factors(83, 97)
    assert factor_prime_or_semiprime(104729) == Prime()
    for bad in (8050, 49, 1):
        with pytest.raises(ValueError):
            factor_prime_or_semiprime(bad)


def test_factor_prime_or_semiprime_small_primes_in_m():
    # 2**40-ish inputs have B = 1; push B up to put N's factor inside m.
    assert factor_prime_or_semiprime(7 * 1000003, smooth_bound=10) == Factors(7, 1000003)
    assert factor_prime_or_semiprime(7, smooth_bound=10) == Prime()
    assert factor_prime_or_semiprime(35, smooth_bound=10) == Factors(5, 7)


def test_no_fallback_raises_when_guard_fails():
    # Tiny N with huge m: even lambda = 1 is too large for D.
    with pytest.raises(SearchUnavailable):
        factor_prime_or_semiprime(1009 * 1013, smooth_bound=40, allow_fallback=False)


def test_order_guard():
    n = 1009 * 1013
    p = choose_params(n)
    m0, lam = order_guard(n, p)
    assert p.D >= (2 * lam + 1) * p.m ** 2 and m0 >= p.m0


def test_semiprimes_main_path():
    rng = random.Random(9)
    for _ in range(30):
        p, q = random_semiprime(rng, 1000, 10 ** 6)
        stats = RunStats()
        assert factor_prime_or_semiprime(p * q, stats, allow_fallback=False) == Factors(p, q)


def test_balance_target_monotone():
    assert balance_target(2 ** 64) < balance_target(2 ** 80) < balance_target(2 ** 96)


def test_factorization_product():
    assert Factorization(12, ((2, 2), (3, 1))).product() == 12

"""Reproducible semiprime inputs and per-engine cost measurement."""

from __future__ import annotations

import random
import time
from math import isqrt

from .driver import factor_prime_or_semiprime
from .outcomes import Factors
from .smallfactor import pollard_strassen
from .stats import RunStats

ENGINES = ("quintic", "pollard-strassen", "trial")

# Miller-Rabin with these bases is exact below 3.3 * 10**24; inputs are generated, not proved.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981


def _is_prime_mr(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError("benchmark primes are limited to 81 bits")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _next_prime(x: int) -> int:
    x |= 1
    while not _is_prime_mr(x):
        x += 2
    return x


def bench_semiprime(bits: int, seed: int = 0) -> tuple[int, int, int]:
    """Deterministic ``(N, p, q)`` with ``N = p*q`` of exactly ``bits`` bits, ``p < q``.

    Rule: seed ``random.Random(seed * 1_000_003 + bits)``; draw ``p`` and ``q``
    as the next primes at or after uniform integers with ``bits // 2`` and
    ``bits - bits // 2`` bits; redraw until the primes differ and the
    product has ``bits`` bits.
    """
    if bits < 8:
        raise ValueError(f"need at least 8 bits, got {bits}")
    rng = random.Random(seed * 1_000_003 + bits)
    lo_bits, hi_bits = bits // 2, bits - bits // 2
    while True:
        p = _next_prime(rng.randrange(1 << (lo_bits - 1), 1 << lo_bits))
        q = _next_prime(rng.randrange(1 << (hi_bits - 1), 1 << hi_bits))
        n = p * q
        if p != q and n.bit_length() == bits:
            return n, min(p, q), max(p, q)


def trial_division(n: int, stats: RunStats | None = None) -> int | None:
    """Smallest prime factor of ``n`` up to ``sqrt(n)``, or ``None``."""
    d = 2
    while d * d <= n:
        if stats is not None:
            stats.modmul_count += 1
        if n % d == 0:
            return d
        d += 1 if d == 2 else 2
    return None


def run_engine(engine: str, n: int, stats: RunStats) -> int | None:
    """Smallest factor of semiprime ``n`` found by ``engine``; updates ``stats``."""
    start = time.perf_counter()
    if engine == "quintic":
        outcome = factor_prime_or_semiprime(n, stats)
        found = outcome.p if isinstance(outcome, Factors) else None
    elif engine == "pollard-strassen":
        found = pollard_strassen(n, isqrt(n), stats)
    elif engine == "trial":
        found = trial_division(n, stats)
    else:
        raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    stats.wall_time_ms += (time.perf_counter() - start) * 1000
    return found

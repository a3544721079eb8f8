"""Parameter selection and the full factorisation pipeline."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import asdict, dataclass
from math import gcd, isqrt

from .arith import ceil_div, iroot, iroot_ceil, lg, primes_upto, primorial_and_totient
from .orderfind import element_of_large_order
from .outcomes import FactorOutcome, Factors, LargeOrder, Prime
from .search import main_search, search_lambda
from .smallfactor import pollard_strassen
from .stats import RunStats

__all__ = [
    "Params",
    "Factorization",
    "DEFAULT_FALLBACK_THRESHOLD",
    "choose_params",
    "pollard_strassen",
    "factor_prime_or_semiprime",
    "factor",
    "SearchUnavailable",
]

DEFAULT_FALLBACK_THRESHOLD = 1 << 60


class SearchUnavailable(RuntimeError):
    """The order guard for the main search cannot be met and fallback is off."""


@dataclass(frozen=True)
class Params:
    B: int
    m: int
    phi_m: int
    m0: int
    D: int

    def as_dict(self) -> dict:
        return {k: str(v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    def __str__(self) -> str:
        terms = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors]
        return f"{self.n} = " + " * ".join(terms)


def balance_target(n: int) -> int:
    """``floor((N (lg lg N)^2 / (lg N)^4)^(1/5))``, the intended size of ``m*m0``."""
    lgn = lg(n)
    llg = lg(lgn)
    return iroot(n * llg * llg // lgn ** 4, 5)


def choose_params(n: int, m0: int | None = None, smooth_bound: int | None = None) -> Params:
    """Sieving modulus, window ratio and order bound for ``n``.

    ``m0`` and ``smooth_bound`` (the prime bound ``B``) override the defaults.
    """
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    B = lg(n) // 30 if smooth_bound is None else smooth_bound
    m, phi = primorial_and_totient(primes_upto(B))
    if m0 is None:
        m0 = max(1, ceil_div(balance_target(n), m))
    if m0 < 1:
        raise ValueError(f"m0 must be >= 1, got {m0}")
    return Params(B=B, m=m, phi_m=phi, m0=m0, D=iroot_ceil(n * n, 5))


def order_guard(n: int, params: Params) -> tuple[int, int] | None:
    """Smallest ``m0' = m0 * 2**k`` with ``D >= (2 lam + 1) m^2``, and its ``lam``.

    ``ord(beta) > D`` then forces ``ord(beta^(m^2)) >= 2 lam + 1``. Returns
    ``None`` when even ``lam = 1`` is too large.
    """
    m2 = params.m * params.m
    if params.D < 3 * m2:
        return None
    m0 = params.m0
    while True:
        lam = search_lambda(n, params.m, m0)
        if params.D >= (2 * lam + 1) * m2:
            return m0, lam
        m0 *= 2


def _split_over_small_primes(n: int, bound: int) -> Factors:
    for r in primes_upto(bound):
        if n % r == 0 and r < n:
            return Factors.from_divisor(r, n)
    raise AssertionError(f"{n} divides the primorial but has no prime factor <= {bound}")


def factor_prime_or_semiprime(
    n: int,
    stats: RunStats | None = None,
    m0: int | None = None,
    smooth_bound: int | None = None,
    allow_fallback: bool = True,
) -> FactorOutcome:
    """``Factors(p, q)`` if ``n = pq``, ``Prime()`` if ``n`` is prime.

    ``n`` must be odd, not a square, and prime or a product of two primes.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {n}")
    if isqrt(n) ** 2 == n:
        raise ValueError(f"N={n} is a perfect square")
    params = choose_params(n, m0=m0, smooth_bound=smooth_bound)
    g = gcd(n, params.m)
    if g == n:
        if any(r == n for r in primes_upto(params.B)):
            return Prime()
        return _split_over_small_primes(n, params.B)
    if g > 1:
        return Factors.from_divisor(g, n)

    outcome = element_of_large_order(n, params.D, stats)
    if not isinstance(outcome, LargeOrder):
        return outcome

    guard = order_guard(n, params)
    if guard is None:
        if not allow_fallback:
            raise SearchUnavailable(f"order guard fails for N={n} with {params}")
        p = pollard_strassen(n, isqrt(n) + 1, stats)
        return Prime() if p is None or p == n else Factors.from_divisor(p, n)
    m0_used, lam = guard
    return main_search(n, params.m, m0_used, outcome.beta, stats=stats, lam=lam)


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in primes_upto(lg(n)):
        r = iroot(n, k)
        if r ** k == n:
            return r, k
    return None


def factor(
    n: int,
    stats: RunStats | None = None,
    m0: int | None = None,
    smooth_bound: int | None = None,
    fallback_threshold: int = DEFAULT_FALLBACK_THRESHOLD,
) -> Factorization:
    """Complete prime factorisation of ``n >= 2``.

    Powers of two and perfect powers are peeled off first. Cofactors below
    ``fallback_threshold`` are split by :func:`pollard_strassen` up to their
    square root; larger ones first lose every prime below their cube root
    and are then prime or semiprime, which goes to
    :func:`factor_prime_or_semiprime`.
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    start = time.perf_counter()
    found: Counter[int] = Counter()
    work = [(n, 1)]
    while work:
        x, mult = work.pop()
        while x % 2 == 0:
            found[2] += mult
            x //= 2
        if x == 1:
            continue
        power = _perfect_power(x)
        if power is not None:
            work.append((power[0], mult * power[1]))
            continue
        if x < fallback_threshold:
            p = pollard_strassen(x, max(2, isqrt(x)), stats)
            if p is None or p == x:
                found[x] += mult
                continue
        else:
            p = pollard_strassen(x, iroot(x, 3) + 1, stats)
        if p is not None:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            found[p] += mult * e
            work.append((x, mult))
            continue
        outcome = factor_prime_or_semiprime(x, stats, m0=m0, smooth_bound=smooth_bound)
        if isinstance(outcome, Factors):
            found[outcome.p] += mult
            found[outcome.q] += mult
        else:
            found[x] += mult
    if stats is not None:
        stats.wall_time_ms += (time.perf_counter() - start) * 1000
    return Factorization(n, tuple(sorted(found.items())))

"""Find a unit of large multiplicative order, a factor, or a primality proof.

The search probes ``alpha = 2, 3, 4, ...``. Each probe either has order above
``D`` (done), or its order ``k`` is computed exactly. In the latter case the
gcds ``gcd(alpha**(k/r) - 1, N)`` for primes ``r | k`` either split ``N`` or
certify that ``k | p - 1`` for every prime ``p | N``. The lcm ``K`` of such
orders therefore restricts every prime divisor to ``1 (mod K)``; once few
candidates ``jK + 1 <= sqrt(N)`` remain they are tried directly, and their
absence proves ``N`` prime. If ``K`` stays small after a fixed number of
probes the search falls back to :func:`~quintic.smallfactor.pollard_strassen`.
"""

from __future__ import annotations

from math import gcd, isqrt, lcm

from .arith import NonInvertible, invmod, iroot, isqrt_ceil, powmod
from .outcomes import Factors, LargeOrder, OrderOutcome, Prime
from .smallfactor import pollard_strassen
from .stats import RunStats

MAX_PROBES = 64


def _prime_divisors(k: int) -> list[int]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def bsgs_order(alpha: int, n: int, bound: int, stats: RunStats | None = None) -> int | None:
    """``ord_n(alpha)`` if it is at most ``bound``, else ``None``.

    Babysteps ``alpha**i`` (``i < s``) are matched against giantsteps
    ``alpha**(-j*s)`` with ``s = ceil(sqrt(bound))``; the first match gives
    the least positive ``k = j*s + i`` with ``alpha**k = 1``.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    alpha %= n
    step_back = invmod(alpha, n)
    s = isqrt_ceil(bound)
    table: dict[int, int] = {}
    x = 1
    for i in range(s):
        if i and x == 1:
            k = i
            break
        table.setdefault(x, i)
        x = x * alpha % n
    else:
        k = None
        giant = powmod(step_back, s, n)
        y = 1
        for j in range(1, s + 1):
            y = y * giant % n
            if y in table:
                k = j * s + table[y]
                break
        if stats is not None:
            stats.modmul_count += j
    if stats is not None:
        stats.modmul_count += len(table)
    if k is None or k > bound:
        return None
    # k is already minimal; stripping prime factors guards the invariant.
    for r in _prime_divisors(k):
        while k % r == 0 and pow(alpha, k // r, n) == 1:
            k //= r
    return k


def _check_order_inputs(n: int, bound: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {n}")
    if not iroot(n * n, 5) <= bound <= n:
        raise ValueError(f"D={bound} outside [N^(2/5), N] for N={n}")


def element_of_large_order(
    n: int, bound: int, stats: RunStats | None = None, max_probes: int = MAX_PROBES
) -> OrderOutcome:
    """A unit of order ``> bound``, a split of ``n``, or a proof that ``n`` is prime.

    Requires ``n`` odd with ``n**(2/5) <= bound <= n``.
    """
    _check_order_inputs(n, bound)
    root = isqrt(n)
    budget = isqrt_ceil(bound)
    lcm_orders = 1
    alpha = 1
    for _ in range(max_probes):
        alpha += 1
        if alpha >= n:
            break
        g = gcd(alpha, n)
        if g > 1:
            return Factors.from_divisor(g, n)
        try:
            k = bsgs_order(alpha, n, bound, stats)
        except NonInvertible as exc:  # pragma: no cover - gcd checked above
            return Factors.from_divisor(exc.g, n)
        if k is None:
            return LargeOrder(alpha)
        for r in _prime_divisors(k):
            g = gcd(pow(alpha, k // r, n) - 1, n)
            if stats is not None:
                stats.gcd_count += 1
            if 1 < g < n:
                return Factors.from_divisor(g, n)
        lcm_orders = lcm(lcm_orders, k)
        if root // lcm_orders <= budget:
            return _scan_progression(n, lcm_orders, root, stats)
    p = pollard_strassen(n, root + 1, stats)
    if p is None or p == n:
        return Prime()
    return Factors.from_divisor(p, n)


def _scan_progression(n: int, step: int, root: int, stats: RunStats | None) -> OrderOutcome:
    # Every prime divisor is 1 mod step; a composite n has one <= sqrt(n).
    for p in range(step + 1, root + 1, step):
        if stats is not None:
            stats.modmul_count += 1
        if n % p == 0:
            return Factors.from_divisor(p, n)
    return Prime()

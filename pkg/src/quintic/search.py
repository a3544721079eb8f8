"""Babystep/giantstep collision search for N = pq.

Babysteps are ``beta**(m^2 i)`` for ``0 <= i <= 2*lam``. For every residue
class ``sigma`` of ``p`` modulo ``m`` and every window
``[sigma0, (1 + 1/m0) sigma0)`` a lattice pair ``(a, b)`` is computed and the
giantstep ``beta**(aN + b - j)`` formed, where ``j`` is chosen so that, in the
cell that actually contains ``p``, ``aq + bp = m^2 i + j`` for some babystep
index ``i``. By Fermat the matching babystep and giantstep then agree modulo
``p``. Exact matches modulo N are checked directly; the remaining giantsteps
go through product-tree collision finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import NonInvertible, ceil_div, invmod, isqrt_ceil, powmod, powmod_cost
from .outcomes import FactorOutcome, Factors, NoFactorsFound, Prime
from .pairgen import compute_pair
from .polyring import geom_chunks, product_tree
from .stats import RunStats

__all__ = [
    "ccheck",
    "find_collisions",
    "search_lambda",
    "sigma0_windows",
    "Giantstep",
    "giantsteps",
    "main_search",
]


def ccheck(n: int, a: int, b: int, u: int) -> tuple[int, int] | None:
    """Recover ``(p, q)`` if ``u == a*q + b*p`` for ``n = p*q``.

    ``a*q`` and ``b*p`` are the roots of ``y**2 - u*y + a*b*n``.
    """
    limit = n ** 4
    if abs(a) > limit or abs(b) > limit or abs(u) > limit:
        return None
    disc = u * u - 4 * a * b * n
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc or (u + s) % 2:
        return None
    for y in ((u + s) // 2, (u - s) // 2):
        g = gcd(y, n)
        if 1 < g < n:
            h = n // g
            return min(g, h), max(g, h)
    return None


# Values are multiplied together in blocks of this size before one gcd.
_GCD_BLOCK = 128


def _first_split(values: list[int], n: int, stats: RunStats | None) -> tuple[int, int] | None:
    """Index and gcd of the first entry with ``gcd(value, n) != 1``, or ``None``."""
    for lo in range(0, len(values), _GCD_BLOCK):
        acc = 1
        for x in values[lo : lo + _GCD_BLOCK]:
            acc = acc * x % n
        if stats is not None:
            stats.gcd_count += 1
            stats.modmul_count += min(_GCD_BLOCK, len(values) - lo)
        if gcd(acc, n) == 1:
            continue
        for i in range(lo, min(lo + _GCD_BLOCK, len(values))):
            if stats is not None:
                stats.gcd_count += 1
            g = gcd(values[i], n)
            if g != 1:
                return i, g
    return None


def find_collisions(
    n: int, kappa: int, alpha: int, values: list[int], stats: RunStats | None = None
) -> FactorOutcome:
    """Split ``n`` if some ``values[h]`` agrees with ``alpha**i`` (``i < kappa``) modulo a factor.

    Assumes no value equals one of those powers exactly modulo ``n``.
    """
    if not values:
        return NoFactorsFound()
    f = product_tree(values, n, stats)
    for i0, block in geom_chunks(f, alpha, kappa, exact=False, stats=stats):
        while block:
            hit = _first_split(block, n, stats)
            if hit is None:
                break
            i, g = hit
            if g != n:
                return Factors.from_divisor(g, n)
            power = pow(alpha, i0 + i, n)
            for v in values:
                if stats is not None:
                    stats.gcd_count += 1
                g = gcd(v - power, n)
                if 1 < g < n:
                    return Factors.from_divisor(g, n)
            i0 += i + 1
            block = block[i + 1 :]
    return NoFactorsFound()


def search_lambda(n: int, m: int, m0: int) -> int:
    """``ceil(4 sqrt(N) / (m*m0)**1.5)``: least ``l`` with ``l**2 (m m0)**3 >= 16 N``."""
    return max(1, isqrt_ceil(ceil_div(16 * n, (m * m0) ** 3)))


def sigma0_windows(n: int, m0: int) -> list[int]:
    """Left ends of the windows ``[s, s + ceil(s/m0))`` tiling ``[1, sqrt(N))``."""
    out = []
    s = 1
    while s * s < n:
        out.append(s)
        s += ceil_div(s, m0)
    return out


@dataclass(frozen=True)
class Giantstep:
    value: int
    j: int
    a: int
    b: int
    sigma: int
    sigma0: int


def giantsteps(n: int, m: int, m0: int, beta: int, lam: int, stats: RunStats | None = None) -> list[Giantstep]:
    """One giantstep per ``(sigma, sigma0)`` cell, in loop order.

    Raises :class:`NonInvertible` if a negative exponent hits a non-unit.
    """
    m2 = m * m
    windows = sigma0_windows(n, m0)
    out = []
    for sigma in range(1, m + 1):
        if gcd(sigma, m) != 1:
            continue
        sigma_inv = invmod(sigma, m2) if m2 > 1 else 0
        for sigma0 in windows:
            a, b = compute_pair(n, m0, sigma0, m, sigma)
            tau = (a * n * sigma_inv + b * sigma) % m2
            tau0 = (a * n + b * sigma0 * sigma0) // (sigma0 * m2)
            j = m2 * (tau0 - lam) + tau
            e = a * n + b - j
            v = powmod(beta, e, n)
            if stats is not None:
                stats.giantstep_count += 1
                stats.lattice_reductions += 1
                stats.modmul_count += powmod_cost(e)
            out.append(Giantstep(v, j, a, b, sigma, sigma0))
    return out


def _babysteps(
    n: int, alpha: int, kappa: int, index: dict[int, list[Giantstep]], stats: RunStats | None
) -> list[tuple[int, Giantstep]] | Factors:
    """Walk ``alpha**i`` for ``i < kappa``, testing ``gcd(alpha**i - 1, n)``.

    Returns every ``(i, giantstep)`` whose value equals ``alpha**i``, or a
    split found by the gcd test. Babysteps are not stored: each is looked up
    in the giantstep ``index`` as it is produced.
    """
    matches = []
    if 1 in index:
        matches.extend((0, g) for g in index[1])
    x = alpha % n
    for lo in range(1, kappa, _GCD_BLOCK):
        hi = min(lo + _GCD_BLOCK, kappa)
        first = x
        acc = 1
        for i in range(lo, hi):
            acc = acc * (x - 1) % n
            if x in index:
                matches.extend((i, g) for g in index[x])
            x = x * alpha % n
        if stats is not None:
            stats.gcd_count += 1
        if gcd(acc, n) != 1:
            y = first
            for i in range(lo, hi):
                # a repeat among the babysteps would mean alpha**i == 1
                assert y != 1, "babysteps repeat: order of beta^(m^2) too small"
                g = gcd(y - 1, n)
                if g != 1:
                    if stats is not None:
                        stats.babystep_count += i + 1
                        stats.modmul_count += 2 * (i + 1)
                    return Factors.from_divisor(g, n)
                y = y * alpha % n
    if stats is not None:
        stats.babystep_count += kappa
        stats.modmul_count += 2 * kappa
    return matches


def main_search(
    n: int, m: int, m0: int, beta: int, stats: RunStats | None = None, lam: int | None = None
) -> FactorOutcome:
    """Return ``Factors(p, q)`` for semiprime ``n``, otherwise ``Prime()``.

    ``beta`` must be a unit with ``ord_n(beta**(m*m)) >= 2*lam + 1``; ``n`` odd,
    not a square, and coprime to ``m``.
    """
    if n < 3 or n % 2 == 0 or isqrt(n) ** 2 == n:
        raise ValueError(f"N must be odd, >= 3 and not a square, got {n}")
    if m < 1 or m0 < 1 or gcd(m, n) != 1:
        raise ValueError(f"need m, m0 >= 1 with gcd(m, N) = 1, got m={m}, m0={m0}")
    if lam is None:
        lam = search_lambda(n, m, m0)
    kappa = 2 * lam + 1
    m2 = m * m
    try:
        alpha = powmod(beta, m2, n)
        if stats is not None:
            stats.modmul_count += powmod_cost(m2)
        giants = giantsteps(n, m, m0, beta, lam, stats)
    except NonInvertible as exc:
        if exc.is_factor:
            return Factors.from_divisor(exc.g, n)
        raise
    index: dict[int, list[Giantstep]] = {}
    for g in giants:
        index.setdefault(g.value, []).append(g)
    matches = _babysteps(n, alpha, kappa, index, stats)
    if isinstance(matches, Factors):
        return matches
    matched = set()
    for i, g in sorted(matches, key=lambda t: (t[0], t[1].sigma, t[1].sigma0)):
        matched.add(g.value)
        found = ccheck(n, g.a, g.b, m2 * i + g.j)
        if found is not None:
            return Factors(*found)
    rest = [g.value for g in giants if g.value not in matched]
    outcome = find_collisions(n, kappa, alpha, rest, stats)
    if isinstance(outcome, Factors):
        return outcome
    return Prime()

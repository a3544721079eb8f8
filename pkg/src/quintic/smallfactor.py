"""Smallest prime factor below a bound by blocked product evaluation."""

from __future__ import annotations

from math import gcd

from .arith import isqrt_ceil
from .polyring import Poly, multieval_tree, product_tree
from .stats import RunStats


def pollard_strassen(n: int, bound: int, stats: RunStats | None = None) -> int | None:
    """Smallest prime factor of ``n`` that is ``<= bound``, or ``None``.

    With ``s = ceil(sqrt(bound))`` the polynomial ``f(x) = (x+1)...(x+s)`` is
    evaluated at ``0, s, 2s, ...``; ``f(ks)`` is the product of the block
    ``ks+1 .. ks+s``. The first block sharing a factor with ``n`` is then
    scanned directly, so the first hit is the least prime divisor.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    s = isqrt_ceil(bound)
    f: Poly = product_tree([-i for i in range(1, s + 1)], n, stats)
    blocks = multieval_tree(f, [k * s for k in range(s)], stats)
    if stats is not None:
        stats.gcd_count += len(blocks)
    for k, value in enumerate(blocks):
        if gcd(value, n) == 1:
            continue
        for x in range(k * s + 1, k * s + s + 1):
            if stats is not None:
                stats.gcd_count += 1
            if x > bound:
                return None
            if gcd(x, n) > 1:
                return x
    return None

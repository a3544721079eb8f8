"""Coefficient pairs (a, b) making aq + bp predictable near a guess for p.

For a window ``sigma0 <= p < (1 + 1/m0) * sigma0`` and a residue class
``p = sigma (mod m)``, :func:`compute_pair` returns a short vector of the
lattice ``{(a, b) : b = gamma*a (mod m)}`` measured in coordinates where the
admissible region is a square. Such a pair makes ``aq + bp`` both close to
``a*N/sigma0 + b*sigma0`` and known modulo ``m**2``.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .arith import invmod
from .lattice import Basis2, Vec2, lagrange_gauss


class Pair(NamedTuple):
    a: int
    b: int


def pair_gamma(n: int, m: int, sigma: int) -> int:
    """The class of ``N / sigma**2`` modulo ``m``, in ``[0, m)``."""
    if m == 1:
        return 0
    return (n % m) * invmod(sigma, m) ** 2 % m


def check_pair_inputs(n: int, m0: int, sigma0: int, m: int, sigma: int) -> None:
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    if m0 < 1 or sigma0 < 1 or m < 1:
        raise ValueError(f"need m0, sigma0, m >= 1, got {m0}, {sigma0}, {m}")
    if not 1 <= sigma <= m:
        raise ValueError(f"sigma must lie in [1, m], got sigma={sigma}, m={m}")
    if gcd(m, n) != 1:
        raise ValueError(f"m={m} is not coprime to N={n}")
    if gcd(sigma, m) != 1:
        raise ValueError(f"sigma={sigma} is not coprime to m={m}")


def compute_pair(n: int, m0: int, sigma0: int, m: int, sigma: int) -> Pair:
    """Short pair ``(a, b) != (0, 0)`` with ``b = gamma*a (mod m)``.

    With ``c = N*a`` and ``d = -N*m0*a + m0*sigma0**2*b`` the result satisfies
    ``c**2, d**2 <= 4*N*m*m0*sigma0**2``.
    """
    check_pair_inputs(n, m0, sigma0, m, sigma)
    gamma = pair_gamma(n, m, sigma)
    scale = m0 * sigma0 * sigma0
    basis = Basis2(Vec2(n, -n * m0 + scale * gamma), Vec2(0, scale * m))
    c, d = lagrange_gauss(basis)
    a, rem_a = divmod(c, n)
    assert rem_a == 0, "short vector left the image lattice"
    b, rem_b = divmod(d + n * m0 * a, scale)
    assert rem_b == 0, "short vector left the image lattice"
    return Pair(a, b)

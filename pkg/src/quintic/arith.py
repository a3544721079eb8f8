"""Integer and modular arithmetic kernel.

Plain Python ints serve as both natural and signed integers. Residues modulo
``N`` are ints in ``[0, N)``; the modulus is passed alongside. Large products
go through GMP (via gmpy2) so that polynomial arithmetic built on Kronecker
substitution inherits fast integer multiplication.
"""

from __future__ import annotations

from math import isqrt

import gmpy2

__all__ = [
    "NonInvertible",
    "lg",
    "iroot",
    "iroot_ceil",
    "isqrt_ceil",
    "is_square",
    "xgcd",
    "floor_div",
    "ceil_div",
    "powmod",
    "invmod",
    "powmod_cost",
    "bigmul",
    "primes_upto",
    "primorial_and_totient",
]

# Below this many bits Python's own multiplication wins over the conversion cost.
_GMP_THRESHOLD_BITS = 4096


class NonInvertible(ArithmeticError):
    """Raised when an element shares a factor with the modulus.

    The offending ``gcd`` is kept on the exception since, for a semiprime
    modulus, it is a factor.
    """

    def __init__(self, g: int, n: int):
        super().__init__(f"not invertible modulo {n}: gcd = {g}")
        self.g = g
        self.n = n

    @property
    def is_factor(self) -> bool:
        return 1 < self.g < self.n


def lg(n: int) -> int:
    """Bit length of ``n``, i.e. floor(log2 n) + 1."""
    if n < 1:
        raise ValueError(f"lg undefined for n = {n}")
    return n.bit_length()


def iroot(n: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= n``, by integer Newton iteration."""
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    if n < 0:
        raise ValueError("iroot of a negative number")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    # Start above the root so Newton decreases monotonically.
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def iroot_ceil(n: int, k: int) -> int:
    """Smallest ``r`` with ``r**k >= n``."""
    r = iroot(n, k)
    return r if r ** k == n else r + 1


def isqrt_ceil(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def xgcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(|x|, |y|)`` and ``u*x + v*y = g``."""
    if x == 0 and y == 0:
        raise ValueError("xgcd(0, 0) is undefined")
    r0, r1 = x, y
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0 < 0:
        r0, u0, v0 = -r0, -u0, -v0
    return r0, u0, v0


def floor_div(x: int, y: int) -> int:
    """Quotient rounded toward minus infinity."""
    if y == 0:
        raise ZeroDivisionError("floor_div by zero")
    return x // y


def ceil_div(x: int, y: int) -> int:
    if y == 0:
        raise ZeroDivisionError("ceil_div by zero")
    return -((-x) // y)


def invmod(x: int, n: int) -> int:
    """Inverse of ``x`` modulo ``n``; raises :class:`NonInvertible` otherwise."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    x %= n
    if x == 0:
        raise NonInvertible(n, n)
    g, u, _ = xgcd(x, n)
    if g != 1:
        raise NonInvertible(g, n)
    return u % n


def powmod_cost(e: int) -> int:
    """Modular multiplications used by left-to-right square-and-multiply."""
    e = abs(e)
    if e < 2:
        return 0
    return e.bit_length() - 1 + bin(e).count("1") - 1


def powmod(base: int, e: int, n: int) -> int:
    """``base**e mod n`` for any signed exponent.

    A negative exponent inverts first, so a base sharing a factor with ``n``
    raises :class:`NonInvertible`.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if e < 0:
        return pow(invmod(base, n), -e, n)
    return pow(base, e, n)


def bigmul(x: int, y: int) -> int:
    """Exact product, delegated to GMP for large operands."""
    if x.bit_length() < _GMP_THRESHOLD_BITS or y.bit_length() < _GMP_THRESHOLD_BITS:
        return x * y
    return int(gmpy2.mpz(x) * gmpy2.mpz(y))


def primes_upto(bound: int) -> list[int]:
    """Primes ``<= bound`` in increasing order (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primorial_and_totient(primes: list[int]) -> tuple[int, int]:
    """Product of ``primes`` and Euler's totient of that (squarefree) product."""
    m, phi = 1, 1
    for r in primes:
        m *= r
        phi *= r - 1
    return m, phi


"""
Exact integer arithmetic
========================

Integer roots, extended gcd, signed modular powers and the sieving modulus.
"""

from quintic.arith import NonInvertible, invmod, iroot, iroot_ceil, powmod, primes_upto, primorial_and_totient, xgcd

# floor and ceiling k-th roots never go through floats
n = 10**40 + 1
print(iroot(n, 5), iroot_ceil(n, 5))

# Bezout coefficients
g, s, t = xgcd(240, 46)
print(g, s, t, 240 * s + 46 * t)

# negative exponents invert first; a shared factor surfaces as an exception
print(powmod(3, -1, 7))
try:
    invmod(22, 77)
except NonInvertible as exc:
    print("not a unit, gcd =", exc.g)

# the sieving modulus is the product of the primes up to B, with its totient
for B in (0, 5, 34):
    m, phi = primorial_and_totient(primes_upto(B))
    print(B, m, phi)

"""
Full factorisation
==================

factor() strips powers of two and perfect powers, removes small primes, and
sends what is left (a prime or a product of two primes) to the main search.
"""

import time

from quintic import RunStats, choose_params, factor, factor_prime_or_semiprime

for n in (12, 8051, 2**64 - 59, 3**20 * 1009, 1000000007 * 1000000009):
    t = time.perf_counter()
    print(factor(n), f"({time.perf_counter() - t:.2f}s)")

# parameters chosen for a 64-bit input
print(choose_params(2**64))

# the semiprime route on its own, with operation counts
stats = RunStats()
n = 1073741827 * 1073741831
print(factor_prime_or_semiprime(n, stats, allow_fallback=False))
print(stats.as_dict())

"""
The babystep/giantstep search
=============================

With a unit beta of large order the search either finds p, q or proves that
N is prime. A small example with m = 1 shows the moving parts.
"""

from quintic.orderfind import element_of_large_order
from quintic.search import ccheck, main_search, search_lambda
from quintic.stats import RunStats

# a*q + b*p determines p and q through a quadratic
print(ccheck(77, 1, 1, 18))

n = 8051
m, m0 = 1, 4
lam = search_lambda(n, m, m0)
print("lambda =", lam, "babysteps =", 2 * lam + 1)

stats = RunStats()
print(main_search(n, m, m0, beta=2, stats=stats))
print(stats.as_dict())

# primes come out as Prime once the search is exhausted
print(main_search(10007, 1, 2, beta=3))

# the order stage supplies beta, or finishes the job on its own
print(element_of_large_order(91, 7))

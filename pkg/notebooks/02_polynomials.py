"""
Polynomials over Z/NZ
=====================

Product trees, evaluation at many points, and evaluation along a geometric
progression with a single convolution.
"""

from quintic.polyring import Poly, geom_eval, multieval_tree, product_tree
from quintic.stats import RunStats

n = 1_000_003
f = product_tree([3, 5, 7, 11], n)
print("f =", f.coeffs)

# evaluation at arbitrary points goes down the remainder tree
print(multieval_tree(f, [0, 3, 4, 100]))

# alpha^0, alpha^1, ... in one pass; compare with plain Horner
alpha = 2
fast = geom_eval(f, alpha, 10)
slow = [f(pow(alpha, i, n)) for i in range(10)]
print(fast == slow, fast[:4])

# multiplication counts are recorded when a RunStats is passed in
stats = RunStats()
big = product_tree(list(range(1, 513)), n, stats)
print(big.degree, stats.modmul_count)

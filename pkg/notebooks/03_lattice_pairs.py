"""
Short lattice vectors and (a, b) pairs
======================================

For a prime p in a window [sigma0, (1 + 1/m0) sigma0) with p = sigma (mod m),
a short lattice vector gives a pair (a, b) for which a*q + b*p is known to
within a small interval and modulo m^2. That is what the main search exploits.
"""

from quintic.lattice import Basis2, Vec2, lagrange_gauss
from quintic.pairgen import compute_pair

w = lagrange_gauss(Basis2(Vec2(3, 4), Vec2(4, 3)))
print("shortest:", w, w.norm2())

p, q = 89, 97
n = p * q
m, sigma, m0, sigma0 = 5, 4, 3, 89
a, b = compute_pair(n, m0, sigma0, m, sigma)
print("pair:", a, b)

# how far a*q + b*p sits from the value predicted by the window end
u = a * q + b * p
guess = a * n / sigma0 + b * sigma0
print("u =", u, " predicted", round(guess, 2), " bound", round(4 * (n * m) ** 0.5 / m0 ** 1.5, 2))

# and its residue modulo m^2 is fixed by sigma
print(u % m**2, (a * n * pow(sigma, -1, m * m) + b * sigma) % m**2)

"""Lagrange-Gauss reduction of rank-2 integer lattices."""

from __future__ import annotations

from typing import NamedTuple


class Vec2(NamedTuple):
    x1: int
    x2: int

    def norm2(self) -> int:
        return self.x1 * self.x1 + self.x2 * self.x2

    def dot(self, other: Vec2) -> int:
        return self.x1 * other.x1 + self.x2 * other.x2

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x1 - other.x1, self.x2 - other.x2)

    def scale(self, k: int) -> Vec2:
        return Vec2(k * self.x1, k * self.x2)


class Basis2(NamedTuple):
    u: Vec2
    v: Vec2


def det2(b: Basis2) -> int:
    """Absolute determinant of the basis, i.e. the lattice covolume."""
    u, v = b
    return abs(u.x1 * v.x2 - u.x2 * v.x1)


def round_half_to_zero(num: int, den: int) -> int:
    """Nearest integer to ``num/den`` (``den > 0``), ties broken toward zero."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q < 0):
        q += 1
    return q


def lagrange_gauss(b: Basis2) -> Vec2:
    """A shortest nonzero vector of the lattice spanned by ``b``.

    Exact integer arithmetic throughout; norms are compared squared.
    """
    if det2(b) == 0:
        raise ValueError(f"degenerate basis {b}")
    u, v = Vec2(*b.u), Vec2(*b.v)
    if u.norm2() > v.norm2():
        u, v = v, u
    while True:
        v = v - u.scale(round_half_to_zero(u.dot(v), u.norm2()))
        if v.norm2() >= u.norm2():
            return u
        u, v = v, u

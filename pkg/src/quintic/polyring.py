"""Dense polynomials over Z_N.

Coefficient lists are stored low degree first. Multiplication packs both
operands into single integers (Kronecker substitution) so that the cost is
that of one big integer product; everything else (product trees, remainder
trees, chirp evaluation) is built from that one multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import bigmul, invmod
from .stats import RunStats

__all__ = [
    "Poly",
    "poly_mul",
    "product_tree",
    "subproduct_tree",
    "geom_eval",
    "geom_chunks",
    "multieval_tree",
]

# Remainders with quotients shorter than this use long division.
_NEWTON_THRESHOLD = 48


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _mul(f: list[int], g: list[int], n: int, stats: RunStats | None = None) -> list[int]:
    """Product of two coefficient lists, reduced modulo ``n``.

    Charged to ``stats`` as one modular multiplication per output coefficient.
    """
    if not f or not g:
        return []
    if stats is not None:
        stats.modmul_count += len(f) + len(g) - 1
    if len(f) == 1 or len(g) == 1:
        (s,), h = (f, g) if len(f) == 1 else (g, f)
        return [s * x % n for x in h]
    bound = min(len(f), len(g)) * (n - 1) ** 2
    nb = max(1, (bound.bit_length() + 7) // 8)
    x = int.from_bytes(b"".join(c.to_bytes(nb, "little") for c in f), "little")
    y = int.from_bytes(b"".join(c.to_bytes(nb, "little") for c in g), "little")
    size = len(f) + len(g) - 1
    raw = bigmul(x, y).to_bytes(nb * size, "little")
    return [int.from_bytes(raw[i : i + nb], "little") % n for i in range(0, nb * size, nb)]


def _inv_series(h: list[int], k: int, n: int, stats: RunStats | None = None) -> list[int]:
    """First ``k`` coefficients of ``1/h`` as a power series (``h[0]`` a unit)."""
    inv = [invmod(h[0], n)]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        e = _mul(h[:prec], inv, n, stats)[:prec]
        t = [(-x) % n for x in e]
        t[0] = (t[0] + 2) % n
        inv = _mul(inv, t, n, stats)[:prec]
    return inv


def _rem(f: list[int], g: list[int], n: int, stats: RunStats | None = None) -> list[int]:
    """``f mod g`` for monic ``g``; the result has exactly ``deg g`` entries."""
    d = len(g) - 1
    if len(f) <= d:
        return list(f) + [0] * (d - len(f))
    k = len(f) - d  # quotient length
    if k < _NEWTON_THRESHOLD or d < 2:
        if stats is not None:
            stats.modmul_count += k * d
        r = list(f)
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i] % n
            if c:
                base = i - d
                for j in range(d):
                    r[base + j] -= c * g[j]
        return [x % n for x in r[:d]]
    rev_q = _mul(f[::-1][:k], _inv_series(g[::-1], k, n, stats), n, stats)[:k]
    q = rev_q[::-1]
    qg = _mul(q, g[:d], n, stats)
    return [(a - b) % n for a, b in zip(f[:d], qg[:d] + [0] * (d - len(qg)))]


@dataclass(frozen=True)
class Poly:
    """Polynomial in Z_N[x]; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        c = _trim([x % self.modulus for x in self.coeffs] or [0])
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __add__(self, other: Poly) -> Poly:
        _check_modulus(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)), self.modulus)

    def __mul__(self, other: Poly) -> Poly:
        return poly_mul(self, other)


def _check_modulus(f: Poly, g: Poly) -> None:
    if f.modulus != g.modulus:
        raise ValueError(f"modulus mismatch: {f.modulus} vs {g.modulus}")


def poly_mul(f: Poly, g: Poly) -> Poly:
    _check_modulus(f, g)
    return Poly(tuple(_mul(list(f.coeffs), list(g.coeffs), f.modulus)), f.modulus)


def subproduct_tree(points: list[int], n: int, stats: RunStats | None = None) -> list[list[list[int]]]:
    """All levels of the product tree over ``(x - v)`` for ``v`` in ``points``.

    ``tree[0]`` holds the linear leaves and ``tree[-1]`` the single root. An
    odd node at the end of a level is carried up unchanged.
    """
    level = [[(-v) % n, 1] for v in points]
    tree = [level]
    while len(level) > 1:
        nxt = [_mul(level[i], level[i + 1], n, stats) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        tree.append(nxt)
        level = nxt
    return tree


def product_tree(points: list[int], n: int, stats: RunStats | None = None) -> Poly:
    """The monic polynomial ``(x - v_1)...(x - v_k)`` over Z_n; ``1`` if empty."""
    if not points:
        return Poly((1,), n)
    return Poly(tuple(subproduct_tree(points, n, stats)[-1][0]), n)


def _chirp(base: int, length: int, n: int) -> list[int]:
    """``base**C(t, 2) mod n`` for ``t < length``."""
    out = [0] * length
    x, step = 1, 1
    for t in range(length):
        out[t] = x
        x = x * step % n
        step = step * base % n
    return out


def geom_chunks(
    f: Poly, alpha: int, kappa: int, exact: bool = True, chunk: int = 1 << 15, stats: RunStats | None = None
):
    """Yield ``(i0, values)`` blocks covering ``f(alpha**i)`` for ``i < kappa``.

    Each block evaluates ``g(x) = f(alpha**i0 * x)`` at ``1, alpha, ...`` with
    one convolution against a shared chirp, using
    ``i*k = C(i+k, 2) - C(i, 2) - C(k, 2)``. With ``exact=False`` entry ``i``
    is left multiplied by the unit ``alpha**C(i, 2)``, which is enough when
    only ``gcd(value, n)`` matters.
    """
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    n = f.modulus
    alpha %= n
    alpha_inv = invmod(alpha, n)
    c = f.coeffs
    deg = len(c) - 1
    width = min(kappa, max(chunk, 2 * (deg + 1)))
    fwd = _chirp(alpha, deg + width, n)
    inv = _chirp(alpha_inv, max(deg + 1, width if exact else 0), n)
    shift = pow(alpha, width, n)
    if stats is not None:
        stats.modmul_count += 2 * len(fwd) + 2 * len(inv)
    head = 1  # alpha**i0
    for i0 in range(0, kappa, width):
        block = min(width, kappa - i0)
        # coefficients of g(x) = f(head * x), reversed and scaled by alpha**-C(k, 2)
        scaled = [0] * (deg + 1)
        w = 1
        for k in range(deg + 1):
            scaled[deg - k] = c[k] * w % n * inv[k] % n
            w = w * head % n
        conv = _mul(scaled, fwd[: deg + block], n, stats)
        if stats is not None:
            stats.modmul_count += 3 * (deg + 1) + (block if exact else 0)
        if exact:
            yield i0, [conv[deg + i] * inv[i] % n for i in range(block)]
        else:
            yield i0, conv[deg : deg + block]
        head = head * shift % n


def geom_eval(f: Poly, alpha: int, kappa: int, stats: RunStats | None = None) -> list[int]:
    """``[f(1), f(alpha), ..., f(alpha**(kappa-1))]``.

    Only ``alpha`` needs to be invertible; raises
    :class:`~quintic.arith.NonInvertible` otherwise.
    """
    out: list[int] = []
    for _, values in geom_chunks(f, alpha, kappa, exact=True, stats=stats):
        out.extend(values)
    return out


def multieval_tree(f: Poly, points: list[int], stats: RunStats | None = None) -> list[int]:
    """``[f(x) for x in points]`` by reducing ``f`` down the subproduct tree."""
    n = f.modulus
    if not points:
        return []
    tree = subproduct_tree(points, n, stats)
    rems = [_rem(list(f.coeffs), tree[-1][0], n, stats)]
    for level in reversed(tree[:-1]):
        rems = [_rem(r, child, n, stats) for k, r in enumerate(rems) for child in level[2 * k : 2 * k + 2]]
    return [r[0] for r in rems]

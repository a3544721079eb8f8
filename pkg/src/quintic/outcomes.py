"""Tagged results shared by the search routines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Prime:
    """N was proved prime."""


@dataclass(frozen=True)
class Factors:
    """A nontrivial split ``N = p * q`` with ``p <= q``."""

    p: int
    q: int

    @classmethod
    def from_divisor(cls, g: int, n: int) -> Factors:
        if not 1 < g < n or n % g:
            raise ValueError(f"{g} is not a nontrivial divisor of {n}")
        h = n // g
        return cls(min(g, h), max(g, h))


@dataclass(frozen=True)
class NoFactorsFound:
    pass


@dataclass(frozen=True)
class LargeOrder:
    """``beta`` is a unit whose multiplicative order exceeds the requested bound."""

    beta: int


FactorOutcome = Union[Prime, Factors, NoFactorsFound]
OrderOutcome = Union[LargeOrder, Factors, Prime]

"""Operation counters threaded through the search routines."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass
class RunStats:
    """Monotone cost accumulators for one factorisation run.

    Every routine that accepts ``stats=None`` adds its own work here when a
    ``RunStats`` is passed. ``modmul_count`` counts multiplications modulo N:
    exponentiations are charged their square-and-multiply cost, and a
    polynomial product is charged one per output coefficient (the reductions
    a Kronecker product performs).
    """

    babystep_count: int = 0
    giantstep_count: int = 0
    modmul_count: int = 0
    gcd_count: int = 0
    lattice_reductions: int = 0
    wall_time_ms: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)

"""Classic degree-based invariants and the ev-degree indices."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph


@dataclass(frozen=True)
class ClassicInvariants:
    n: int
    m: int
    M1: int
    M2: int
    F: int
    HM1: int
    eta: int


@dataclass(frozen=True)
class EvIndexBundle:
    Mev: int
    Fev: int
    NKev: int
    mMev: Fraction
    Rev: float
    ev_degrees: tuple[int, ...]


def classic_invariants(G: Graph) -> ClassicInvariants:
    # Python ints are unbounded, so the exact-or-error contract never hits the error arm.
    deg = G.degrees()
    M1 = sum(d * d for d in deg)
    F = sum(d * d * d for d in deg)
    M2 = 0
    HM1 = 0
    for u, v in G.edges:
        du, dv = deg[u], deg[v]
        M2 += du * dv
        HM1 += (du + dv) ** 2
    return ClassicInvariants(n=G.n, m=G.m, M1=M1, M2=M2, F=F, HM1=HM1, eta=G.triangle_count())


def ev_indices(G: Graph) -> EvIndexBundle:
    evd = tuple(G.ev_degrees())
    NKev = math.prod(evd)
    mMev = sum((Fraction(1, d * d) for d in evd), Fraction(0))
    Rev = math.fsum(1.0 / math.sqrt(d) for d in evd)
    return EvIndexBundle(
        Mev=sum(d * d for d in evd),
        Fev=sum(d**3 for d in evd),
        NKev=NKev,
        mMev=mMev,
        Rev=Rev,
        ev_degrees=evd,
    )


def mev(G: Graph) -> int:
    """Shortcut for the ev-degree Zagreb index alone."""
    return sum(d * d for d in G.ev_degrees())

"""Deterministic graph families for building test corpora.

Random families draw from xorshift64* (Vigna 2014) seeded through one
splitmix64 step, so a given ``(family, params, seed)`` produces the same edge
list in any language that implements the same two generators. For each
candidate pair in lexicographic order one 64-bit word is drawn; the pair is an
edge iff ``(word >> 11) * 2**-53 < p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph

MASK64 = (1 << 64) - 1

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "random_gnp",
    "random_bipartite_gnp",
)


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* with shifts (12, 25, 27) and multiplier 0x2545F4914F6CDD1D."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        s = splitmix64(seed & MASK64)
        self.state = s or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection (no modulo bias)."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % span


@dataclass(frozen=True)
class FamilySpec:
    """A graph family plus its parameters.

    ``sizes`` holds one size for path/cycle/complete/random_gnp, the leaf
    count for star (``K1,k``), and two part sizes for the bipartite families.
    """

    family: str
    sizes: tuple[int, ...]
    p: float | None = None
    seed: int = 0
    label: str | None = field(default=None, compare=False)

    def describe(self) -> str:
        if self.label:
            return self.label
        args = ",".join(str(s) for s in self.sizes)
        if self.family.startswith("random"):
            return f"{self.family}({args},p={self.p!r},seed={self.seed})"
        return f"{self.family}({args})"


def _need(spec: FamilySpec, count: int, minimum: int = 1) -> tuple[int, ...]:
    if len(spec.sizes) != count:
        raise ValueError(f"{spec.family} takes {count} size(s), got {spec.sizes}")
    for s in spec.sizes:
        if int(s) != s or s < minimum:
            raise ValueError(f"{spec.family}: sizes must be integers >= {minimum}, got {spec.sizes}")
    return tuple(int(s) for s in spec.sizes)


def _prob(spec: FamilySpec) -> float:
    if spec.p is None or not 0.0 <= spec.p <= 1.0:
        raise ValueError(f"{spec.family}: probability must be in [0, 1], got {spec.p}")
    return float(spec.p)


def gnp_pairs(n: int, p: float, rng: XorShift64Star) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                yield (u, v)


def generate(spec: FamilySpec) -> Graph:
    fam = spec.family
    if fam == "path":
        (n,) = _need(spec, 1)
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if fam == "cycle":
        (n,) = _need(spec, 1, minimum=3)
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "complete":
        (n,) = _need(spec, 1)
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if fam == "star":
        (k,) = _need(spec, 1)
        return Graph(k + 1, ((0, i) for i in range(1, k + 1)))
    if fam == "complete_bipartite":
        a, b = _need(spec, 2)
        return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if fam == "random_gnp":
        (n,) = _need(spec, 1)
        p = _prob(spec)
        return Graph(n, gnp_pairs(n, p, XorShift64Star(spec.seed)))
    if fam == "random_bipartite_gnp":
        a, b = _need(spec, 2)
        p = _prob(spec)
        rng = XorShift64Star(spec.seed)
        return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p])
    raise ValueError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def path(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def star(k: int) -> Graph:
    return generate(FamilySpec("star", (k,)))

"""Immutable simple undirected graphs with bitset adjacency.

Vertices are dense ids ``0..n-1``. Edges are stored canonically as ``(u, v)``
with ``u < v``, sorted lexicographically, so every graph built here has a
byte-stable serialization.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised when an edge set violates the simple-graph invariants."""


class ParseError(ValueError):
    """Raised for malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """A simple undirected graph.

    Each vertex keeps a sorted neighbor tuple and a bit-row (a Python int
    used as a bitset) so that common-neighbor counts are a single AND plus
    popcount.
    """

    __slots__ = ("_n", "_edges", "_adj", "_rows")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in canon:
                raise GraphError(f"duplicate edge ({u}, {v})")
            canon.add((u, v))
        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        rows = [0] * n
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._rows = tuple(rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adj

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range for n={self._n}")

    def _check_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if not (self._rows[u] >> v) & 1:
            raise GraphError(f"({u}, {v}) is not an edge")

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self._n and 0 <= v < self._n):
            return False
        return bool((self._rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def triangles_on_edge(self, u: int, v: int) -> int:
        """Number of common neighbors of ``u`` and ``v``; ``uv`` must be an edge."""
        self._check_edge(u, v)
        return (self._rows[u] & self._rows[v]).bit_count()

    def triangles_at_vertex(self, v: int) -> int:
        """Number of edges inside the open neighborhood of ``v``."""
        self._check_vertex(v)
        row = self._rows[v]
        twice = sum((self._rows[w] & row).bit_count() for w in self._adj[v])
        return twice // 2

    def edge_triangles(self) -> list[int]:
        """Per-edge triangle counts in canonical edge order."""
        rows = self._rows
        return [(rows[u] & rows[v]).bit_count() for u, v in self._edges]

    def triangle_count(self) -> int:
        total = sum(self.edge_triangles())
        if total % 3:
            raise AssertionError(f"edge triangle sum {total} not divisible by 3")
        return total // 3

    def ev_degree(self, u: int, v: int) -> int:
        """Vertices dominated by edge ``uv``: ``d(u) + d(v) - |N(u) & N(v)|``."""
        self._check_edge(u, v)
        common = (self._rows[u] & self._rows[v]).bit_count()
        return len(self._adj[u]) + len(self._adj[v]) - common

    def ev_degrees(self) -> list[int]:
        """ev-degrees of all edges in canonical edge order."""
        rows, adj = self._rows, self._adj
        return [
            len(adj[u]) + len(adj[v]) - (rows[u] & rows[v]).bit_count()
            for u, v in self._edges
        ]

    def is_connected(self) -> bool:
        """True iff the graph has at most one component (K0 and K1 count)."""
        if self._n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self._n) - 1

    def is_triangle_free(self) -> bool:
        rows = self._rows
        return not any(rows[u] & rows[v] for u, v in self._edges)


def from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format. ``#`` starts a comment."""
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            what = "header" if header is None else "edge line"
            raise ParseError(f"malformed {what}: expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            what = "header" if header is None else "edge line"
            raise ParseError(f"malformed {what}: {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("malformed header: negative count", lineno)
            header = (a, b)
            n = a
            continue
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range in ({a}, {b}) for n={n}", lineno)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError("missing header", 1)
    if len(edges) != header[1]:
        raise ParseError(f"edge count mismatch: header says {header[1]}, found {len(edges)}")
    return Graph(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def _g6_size(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(G: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    data = _g6_size(G.n)
    bits = []
    rows = G.rows
    for v in range(1, G.n):
        for u in range(v):
            bits.append((rows[u] >> v) & 1)
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        data.append(sum(b << (5 - k) for k, b in enumerate(chunk)))
    return "".join(chr(d + 63) for d in data)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"bad graph6 byte {ch!r} at offset {i}")
        vals.append(c - 63)
    if not vals:
        raise ParseError("empty graph6 string")
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for d in vals[2:8]:
            n = (n << 6) | d
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for d in vals[1:4]:
            n = (n << 6) | d
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise ParseError(f"truncated graph6 bit stream: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise ParseError(f"trailing data in graph6 string ({len(body) - need} extra bytes)")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)

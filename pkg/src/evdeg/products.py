"""Binary graph operations.

Pair labeling: vertex ``(i, j)`` of a product on ``G, H`` gets id
``i * n(H) + j``. Union and join place ``G`` first and offset ``H`` by
``n(G)``. Corona keeps ``G`` at ``0..n(G)-1`` and puts copy ``i`` of ``H`` at
offset ``n(G) + i * n(H)``.
"""
from __future__ import annotations

from .graph import Graph


def union(G: Graph, H: Graph) -> Graph:
    off = G.n
    edges = list(G.edges)
    edges.extend((off + a, off + b) for a, b in H.edges)
    return Graph(G.n + H.n, edges)


def join(G: Graph, H: Graph) -> Graph:
    off = G.n
    edges = list(G.edges)
    edges.extend((off + a, off + b) for a, b in H.edges)
    edges.extend((x, off + y) for x in range(G.n) for y in range(H.n))
    return Graph(G.n + H.n, edges)


def cartesian(G: Graph, H: Graph) -> Graph:
    k = H.n
    edges = [(x * k + a, x * k + b) for x in range(G.n) for a, b in H.edges]
    edges.extend((a * k + y, b * k + y) for a, b in G.edges for y in range(k))
    return Graph(G.n * k, edges)


def composition(G: Graph, H: Graph) -> Graph:
    """Lexicographic product G[H]; not symmetric in its arguments."""
    k = H.n
    edges = [(a * k + y, b * k + z) for a, b in G.edges for y in range(k) for z in range(k)]
    edges.extend((x * k + a, x * k + b) for x in range(G.n) for a, b in H.edges)
    return Graph(G.n * k, edges)


def corona(G: Graph, H: Graph) -> Graph:
    k = H.n
    edges = list(G.edges)
    for i in range(G.n):
        off = G.n + i * k
        edges.extend((off + a, off + b) for a, b in H.edges)
        edges.extend((i, off + y) for y in range(k))
    return Graph(G.n * (1 + k), edges)


def tensor(G: Graph, H: Graph) -> Graph:
    k = H.n
    edges = []
    for a, b in G.edges:
        for y, z in H.edges:
            edges.append((a * k + y, b * k + z))
            edges.append((a * k + z, b * k + y))
    return Graph(G.n * k, edges)


PRODUCTS = {
    "union": union,
    "join": join,
    "cartesian": cartesian,
    "composition": composition,
    "corona": corona,
    "tensor": tensor,
}

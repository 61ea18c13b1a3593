"""F-sums ``G +_F H`` for F in {Sd, ESTo, VSTo, To}.

Vertex ``(a, j)`` has id ``a * n(H) + j``, where ``a`` is the id of the
vertex in ``F(G)`` (original vertices ``0..n(G)-1``, edge-vertices after).
H-edges are copied only into columns over original vertices of G.
"""
from __future__ import annotations

from enum import Enum

from .graph import Graph
from .transforms import edge_semitotal, subdivision, total_graph, vertex_semitotal


class FKind(str, Enum):
    SD = "Sd"
    ESTO = "ESTo"
    VSTO = "VSTo"
    TO = "To"


_BUILDERS = {
    FKind.SD: subdivision,
    FKind.ESTO: edge_semitotal,
    FKind.VSTO: vertex_semitotal,
    FKind.TO: total_graph,
}


def derived(G: Graph, kind: FKind) -> Graph:
    return _BUILDERS[FKind(kind)](G)


def f_sum(G: Graph, H: Graph, kind: FKind | str) -> Graph:
    FG = derived(G, FKind(kind))
    k = H.n
    edges = [(x * k + a, x * k + b) for x in range(G.n) for a, b in H.edges]
    edges.extend((a * k + y, b * k + y) for a, b in FG.edges for y in range(k))
    return Graph(FG.n * k, edges)

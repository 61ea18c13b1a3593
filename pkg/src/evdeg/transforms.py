"""Unary derived graphs: line, subdivision, semitotal and total graphs.

Labeling: original vertex ``i`` keeps id ``i``; the edge of rank ``r`` in
``G.edges`` becomes vertex ``n + r``. In the line graph, edge rank ``r`` is
vertex ``r``.
"""
from __future__ import annotations

from typing import Iterator

from .graph import Edge, Graph


def _line_edges(G: Graph, offset: int = 0) -> Iterator[Edge]:
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for r, (u, v) in enumerate(G.edges):
        incident[u].append(r)
        incident[v].append(r)
    # Two edges of a simple graph share at most one endpoint, so each pair appears once.
    for ranks in incident:
        for i, a in enumerate(ranks):
            for b in ranks[i + 1 :]:
                yield (offset + a, offset + b)


def _incidence_edges(G: Graph) -> Iterator[Edge]:
    n = G.n
    for r, (u, v) in enumerate(G.edges):
        yield (u, n + r)
        yield (v, n + r)


def line_graph(G: Graph) -> Graph:
    return Graph(G.m, _line_edges(G))


def subdivision(G: Graph) -> Graph:
    return Graph(G.n + G.m, _incidence_edges(G))


def edge_semitotal(G: Graph) -> Graph:
    edges = list(_incidence_edges(G))
    edges.extend(_line_edges(G, offset=G.n))
    return Graph(G.n + G.m, edges)


def vertex_semitotal(G: Graph) -> Graph:
    edges = list(G.edges)
    edges.extend(_incidence_edges(G))
    return Graph(G.n + G.m, edges)


def total_graph(G: Graph) -> Graph:
    edges = list(G.edges)
    edges.extend(_incidence_edges(G))
    edges.extend(_line_edges(G, offset=G.n))
    return Graph(G.n + G.m, edges)


TRANSFORMS = {
    "line": line_graph,
    "sd": subdivision,
    "esto": edge_semitotal,
    "vsto": vertex_semitotal,
    "to": total_graph,
}

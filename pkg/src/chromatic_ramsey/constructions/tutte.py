"""Iterated build of graphs with given chromatic number from uniform hypergraphs."""

from __future__ import annotations

from typing import Sequence

from ..core import CAPACITY, Graph, empty_graph
from ..errors import CapacityError, GraphError
from .hypergraph import Hypergraph


def tutte_step(prev: Graph, h: Hypergraph) -> Graph:
    """One level: an independent set on the hypergraph's vertices plus one copy of
    ``prev`` per hyperedge, copy vertex ``t`` matched to the ``t``-th smallest
    vertex of that hyperedge.

    Layout: the independent set takes ``0..h.n-1``; copy ``c`` takes the next
    ``prev.n`` indices.
    """
    if h.r != prev.n:
        raise GraphError(f"hypergraph must be {prev.n}-uniform, got {h.r}-uniform")
    total = h.n + h.m * prev.n
    if total > CAPACITY:
        raise CapacityError(f"{total} vertices exceeds capacity {CAPACITY}")
    rows = [0] * total
    prev_edges = prev.edges()
    for c, e in enumerate(h.edges):
        base = h.n + c * prev.n
        for u, v in prev_edges:
            rows[base + u] |= 1 << (base + v)
            rows[base + v] |= 1 << (base + u)
        for t, x in enumerate(e):
            rows[base + t] |= 1 << x
            rows[x] |= 1 << (base + t)
    return Graph(total, tuple(rows))


def tutte_graph(i: int, hypergraphs: Sequence[Hypergraph]) -> Graph:
    """``T_1`` is two isolated vertices; ``T_j`` applies :func:`tutte_step` with
    ``hypergraphs[j - 2]``, which must be ``|T_{j-1}|``-uniform."""
    if i < 1:
        raise GraphError("i must be at least 1")
    if len(hypergraphs) != i - 1:
        raise GraphError(f"need {i - 1} hypergraphs for level {i}, got {len(hypergraphs)}")
    t = empty_graph(2)
    for h in hypergraphs:
        t = tutte_step(t, h)
    return t

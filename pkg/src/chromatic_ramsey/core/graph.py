"""Labeled simple graphs stored as bit adjacency rows.

Row ``v`` of a graph is a Python int whose bit ``u`` is set iff ``uv`` is an
edge.  Graph values are immutable; every operator returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..errors import CapacityError, GraphError

# Hard upper bound on the vertex count of any Graph value.  Constructions
# (tensor products, Tutte-style graphs) multiply factor sizes, hence the
# generous figure; exact invariants have their own, much smaller, limits.
CAPACITY = 1 << 15


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if self.n > CAPACITY:
            raise CapacityError(f"{self.n} vertices exceeds capacity {CAPACITY}")
        if len(self.rows) != self.n:
            raise GraphError("one adjacency row per vertex required")

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def adjacency_lists(self) -> list[list[int]]:
        return [list(iter_bits(r)) for r in self.rows]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges collapse."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n > CAPACITY:
        raise CapacityError(f"{n} vertices exceeds capacity {CAPACITY}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    """Wrap raw adjacency rows, checking symmetry and the zero diagonal."""
    n = len(rows)
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row & ~full or row >> v & 1:
            raise GraphError(f"row {v} has out-of-range bits or a loop")
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > CAPACITY:
        raise CapacityError("disjoint union exceeds capacity")
    return Graph(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    if g.n + h.n > CAPACITY:
        raise CapacityError("join exceeds capacity")
    low = g.full_mask
    high = h.full_mask << g.n
    rows = tuple(r | high for r in g.rows) + tuple((r << g.n) | low for r in h.rows)
    return Graph(g.n + h.n, rows)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product; vertex ``(u, v)`` gets index ``u * |h| + v``."""
    m = h.n
    size = g.n * m
    if size > CAPACITY:
        raise CapacityError(f"tensor product of size {size} exceeds capacity")
    rows = []
    for u in range(g.n):
        g_nbrs = list(iter_bits(g.rows[u]))
        for v in range(m):
            hrow = h.rows[v]
            row = 0
            for u2 in g_nbrs:
                row |= hrow << (u2 * m)
            rows.append(row)
    return Graph(size, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph relabeled contiguously, preserving vertex order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.rows[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def remove_isolated(g: Graph) -> Graph:
    return induced_subgraph(g, (v for v in range(g.n) if g.rows[v]))


def add_vertex(g: Graph, neighbors: int) -> Graph:
    """Append vertex ``g.n`` adjacent to the vertex mask ``neighbors``."""
    v = g.n
    bit = 1 << v
    rows = tuple(r | bit if neighbors >> u & 1 else r for u, r in enumerate(g.rows))
    return Graph(v + 1, rows + (neighbors,))

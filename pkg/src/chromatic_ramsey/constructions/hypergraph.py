"""Uniform hypergraphs: weak colourings, cycle girth, random high-girth search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from ..core import INFINITE, Graph, girth, make_graph
from ..errors import GraphError, SizeLimitError

MAX_HYPERGRAPH_VERTICES = 20
MAX_HYPERGRAPH_EDGES = 40


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise GraphError("uniformity must be at least 2")
        seen = set()
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise GraphError(f"edge {e} does not have {self.r} distinct vertices")
            if any(not 0 <= v < self.n for v in e):
                raise GraphError(f"edge {e} has a vertex outside 0..{self.n - 1}")
            if tuple(sorted(e)) != e:
                raise GraphError(f"edge {e} is not sorted")
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.r}"] + [" ".join(map(str, e)) for e in self.edges]
        return "\n".join(lines) + "\n"

    def incidence_graph(self) -> Graph:
        """Bipartite graph on vertices ``0..n-1`` and edges ``n..n+m-1``."""
        return make_graph(
            self.n + self.m, [(v, self.n + j) for j, e in enumerate(self.edges) for v in e]
        )


def make_hypergraph(n: int, r: int, edges) -> Hypergraph:
    return Hypergraph(n, r, tuple(tuple(sorted(e)) for e in edges))


def from_graph(g: Graph) -> Hypergraph:
    """A graph as a 2-uniform hypergraph."""
    return Hypergraph(g.n, 2, tuple(g.edges()))


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("first line must be 'n r'")
    n, r = map(int, lines[0])
    return make_hypergraph(n, r, [tuple(map(int, ln)) for ln in lines[1:]])


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def fano_plane() -> Hypergraph:
    return make_hypergraph(7, 3, [(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)])


def compose(outer: Hypergraph, inner: Hypergraph) -> Hypergraph:
    """Replace each outer vertex by a copy of ``inner``.

    Vertex ``(p, x)`` becomes ``p * inner.n + x``.  For every outer edge and
    every choice of one inner edge per point of it, the union of the chosen
    inner edges (in their copies) is an edge, so the result is
    ``outer.r * inner.r``-uniform.  If neither factor is 2-colourable the
    composition is not either: some copy-wise majority colour would have to
    avoid a monochromatic outer edge.
    """
    edges = []
    for oe in outer.edges:
        for choice in product(inner.edges, repeat=outer.r):
            edges.append(
                tuple(sorted(p * inner.n + x for p, ie in zip(oe, choice) for x in ie))
            )
    return make_hypergraph(outer.n * inner.n, outer.r * inner.r, edges)


def _check(h: Hypergraph, what: str) -> None:
    if h.n > MAX_HYPERGRAPH_VERTICES:
        raise SizeLimitError(f"{what} is limited to {MAX_HYPERGRAPH_VERTICES} vertices")


def _colourable(h: Hypergraph, k: int) -> bool:
    # vertices in order; each edge is checked when its last vertex is coloured
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(h.n)]
    for e in h.edges:
        closing[max(e)].append(e)
    colour = [-1] * h.n

    def place(v: int, used: int) -> bool:
        if v == h.n:
            return True
        for c in range(min(k, used + 1)):
            colour[v] = c
            if all(any(colour[u] != c for u in e) for e in closing[v]):
                if place(v + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return place(0, 0)


def hypergraph_chromatic_number(h: Hypergraph) -> int:
    """Fewest colours leaving no hyperedge monochromatic."""
    _check(h, "hypergraph_chromatic_number")
    if h.n == 0:
        return 0
    k = 1
    while not _colourable(h, k):
        k += 1
    return k


def hypergraph_girth(h: Hypergraph):
    """Shortest cycle through distinct vertices and distinct edges, or ``INFINITE``.

    A cycle of length s is a cycle of length 2s in the incidence graph.
    """
    _check(h, "hypergraph_girth")
    if h.m > MAX_HYPERGRAPH_EDGES:
        raise SizeLimitError(f"hypergraph_girth is limited to {MAX_HYPERGRAPH_EDGES} edges")
    gi = girth(h.incidence_graph())
    return gi if gi is INFINITE else gi // 2


def find_high_girth_hypergraph(
    r: int, k: int, g: int, budget: int = 2000, seed: int = 0, max_n: int = MAX_HYPERGRAPH_VERTICES
) -> Hypergraph | None:
    """Random search for an r-uniform hypergraph with chromatic number >= k and girth >= g.

    Each attempt grows a random edge set on a random number of vertices,
    rejecting edges that would close a short cycle, and returns as soon as
    the chromatic number reaches ``k``.  Every returned object has been
    verified; ``None`` means the attempt budget ran out.
    """
    if r < 2 or k < 1 or g < 2:
        raise ValueError("need r >= 2, k >= 1, g >= 2")
    rng = random.Random(seed)
    if k <= 1:
        return Hypergraph(r, r, ())
    for _ in range(budget):
        n = rng.randint(r, max_n)
        edges: list[tuple[int, ...]] = []
        stale = 0
        while stale < 50 and len(edges) < MAX_HYPERGRAPH_EDGES:
            e = tuple(sorted(rng.sample(range(n), r)))
            if e in edges:
                stale += 1
                continue
            trial = Hypergraph(n, r, tuple(edges) + (e,))
            if hypergraph_girth(trial) < g:
                stale += 1
                continue
            edges.append(e)
            stale = 0
            if hypergraph_chromatic_number(trial) >= k:
                return trial
    return None

"""Homomorphisms, quotient images, minimal homomorphic images, subgraph search."""

from __future__ import annotations

from typing import Iterable, Iterator

from .core import (
    Graph,
    canonical_form,
    delete_edge,
    delete_vertex,
    graph6_encode,
    induced_subgraph,
    iter_bits,
)
from .core.invariants import _check_size
from .errors import SizeLimitError

MAX_QUOTIENT_VERTICES = 12


def _family_key(g: Graph) -> tuple[int, int, bytes]:
    return (g.n, g.num_edges(), graph6_encode(g))


class GraphFamily:
    """Finite set of graphs up to isomorphism, kept in canonical form.

    Iteration order is by (vertex count, edge count, canonical graph6).
    """

    def __init__(self, graphs: Iterable[Graph] = ()) -> None:
        members: dict[bytes, Graph] = {}
        for g in graphs:
            c = canonical_form(g)
            members.setdefault(graph6_encode(c), c)
        self._members = tuple(sorted(members.values(), key=_family_key))
        self._keys = frozenset(members)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __getitem__(self, i: int) -> Graph:
        return self._members[i]

    def __contains__(self, g: Graph) -> bool:
        return graph6_encode(canonical_form(g)) in self._keys

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self._keys == other._keys

    def __hash__(self) -> int:
        return hash(self._keys)

    def __repr__(self) -> str:
        return f"GraphFamily({self.graph6_list()})"

    def graph6_list(self) -> list[str]:
        return [graph6_encode(g).decode("ascii") for g in self._members]

    def without(self, g: Graph) -> GraphFamily:
        """Copy of the family with every member isomorphic to ``g`` removed."""
        key = graph6_encode(canonical_form(g))
        return GraphFamily(m for m in self._members if graph6_encode(m) != key)


def has_homomorphism(g: Graph, h: Graph) -> bool:
    """True iff some vertex map ``g -> h`` sends edges to edges."""
    _check_size(g, "has_homomorphism")
    _check_size(h, "has_homomorphism")
    if g.n == 0:
        return True
    if h.n == 0:
        return False
    if not any(g.rows):
        return True
    if not any(h.rows):
        return False

    deg = g.degrees()
    order = sorted((v for v in range(g.n) if deg[v]), key=lambda v: (-deg[v], v))
    position = {v: i for i, v in enumerate(order)}
    later = [[w for w in g.neighbors(v) if position[w] > position[v]] for v in order]
    h_rows = h.rows
    active = 0
    for x in range(h.n):
        if h_rows[x]:
            active |= 1 << x
    dom = {v: active for v in order}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for x in iter_bits(dom[u]):
            row = h_rows[x]
            saved = []
            ok = True
            for w in later[i]:
                old = dom[w]
                new = old & row
                saved.append((w, old))
                dom[w] = new
                if not new:
                    ok = False
                    break
            if ok and extend(i + 1):
                return True
            for w, old in saved:
                dom[w] = old
        return False

    return extend(0)


def _merge(g: Graph, u: int, v: int) -> Graph:
    # identify non-adjacent u and v; v disappears
    rows = list(g.rows)
    rows[u] |= rows[v]
    ubit = 1 << u
    for w in iter_bits(rows[v]):
        rows[w] |= ubit
    merged = Graph(g.n, tuple(rows))
    return induced_subgraph(merged, (w for w in range(g.n) if w != v))


def quotients(g: Graph, max_vertices: int = MAX_QUOTIENT_VERTICES) -> GraphFamily:
    """All quotients of ``g`` by partitions into independent blocks, up to isomorphism.

    Every such quotient arises from a chain of merges of non-adjacent vertex
    pairs, so the search walks merge chains and deduplicates each level by
    canonical form before expanding it.
    """
    if g.n > max_vertices:
        raise SizeLimitError(f"quotients is limited to {max_vertices} vertices, got {g.n}")
    start = canonical_form(g)
    seen: dict[bytes, Graph] = {graph6_encode(start): start}
    frontier = [start]
    while frontier:
        following = []
        for q in frontier:
            for u in range(q.n):
                non_nbrs = ~q.rows[u] & q.full_mask & ~((2 << u) - 1)
                for v in iter_bits(non_nbrs):
                    m = canonical_form(_merge(q, u, v))
                    key = graph6_encode(m)
                    if key not in seen:
                        seen[key] = m
                        following.append(m)
        frontier = following
    return GraphFamily(seen.values())


def is_minimal_image(g: Graph, h: Graph) -> bool:
    """True iff ``g -> h`` exists but no single edge or vertex deletion of ``h`` admits one.

    The homomorphic class is closed under supergraphs, so single deletions
    suffice to certify minimality among all proper subgraphs.
    """
    if not has_homomorphism(g, h):
        return False
    for u, v in h.edges():
        if has_homomorphism(g, delete_edge(h, u, v)):
            return False
    for v in range(h.n):
        if has_homomorphism(g, delete_vertex(h, v)):
            return False
    return True


def minimal_hom_images(g: Graph, max_vertices: int = MAX_QUOTIENT_VERTICES) -> GraphFamily:
    """Subgraph-minimal homomorphic images of ``g`` (the family Hom')."""
    candidates = [h for h in quotients(g, max_vertices) if is_minimal_image(g, h)]
    kept = []
    for h in candidates:
        smaller = (
            c for c in candidates
            if c is not h and c.n <= h.n and c.num_edges() <= h.num_edges()
        )
        if not any(is_subgraph(c, h) for c in smaller):
            kept.append(h)
    return GraphFamily(kept)


def _ullmann_refine(cand: list[int], pending: list[int], nbrs_pending, f_rows) -> bool:
    changed = True
    while changed:
        changed = False
        for u in pending:
            cu = cand[u]
            keep = cu
            for x in iter_bits(cu):
                row = f_rows[x]
                for w in nbrs_pending[u]:
                    if not cand[w] & row:
                        keep &= ~(1 << x)
                        break
            if keep != cu:
                if not keep:
                    return False
                cand[u] = keep
                changed = True
    return True


def is_subgraph(h: Graph, f: Graph) -> bool:
    """True iff ``f`` contains a (not necessarily induced) copy of ``h``.

    Ullmann-style search over candidate bitsets: each assignment removes the
    image from every other candidate set, intersects the pattern neighbours'
    sets with the image's neighbourhood, then prunes candidates lacking a
    compatible neighbour until a fixpoint.
    """
    if h.n > f.n:
        return False
    if h.n == 0:
        return True
    m_h = h.num_edges()
    if m_h > f.num_edges():
        return False
    hd = h.degrees()
    fd = f.degrees()
    if any(a > b for a, b in zip(sorted(hd, reverse=True), sorted(fd, reverse=True))):
        return False
    order = sorted(range(h.n), key=lambda u: (-hd[u], u))
    position = {u: i for i, u in enumerate(order)}
    f_rows = f.rows
    by_degree = {}
    for d in set(hd):
        mask = 0
        for x in range(f.n):
            if fd[x] >= d:
                mask |= 1 << x
        by_degree[d] = mask
    cand = [by_degree[hd[u]] for u in range(h.n)]
    if not all(cand):
        return False
    h_rows = h.rows
    # pattern neighbours of u placed after position i, for each depth i
    nbrs_after = [
        {u: [w for w in iter_bits(h_rows[u]) if position[w] >= i] for u in order[i:]}
        for i in range(h.n + 1)
    ]
    if not _ullmann_refine(cand, order, nbrs_after[0], f_rows):
        return False

    def extend(i: int, cand: list[int]) -> bool:
        if i == h.n:
            return True
        u = order[i]
        rest = order[i + 1:]
        h_row = h_rows[u]
        for x in iter_bits(cand[u]):
            bit = 1 << x
            new = cand[:]
            new[u] = bit
            row = f_rows[x]
            ok = True
            union = 0
            for w in rest:
                c = new[w] & ~bit
                if h_row >> w & 1:
                    c &= row
                if not c:
                    ok = False
                    break
                new[w] = c
                union |= c
            if not ok or union.bit_count() < len(rest):
                continue
            if not _ullmann_refine(new, rest, nbrs_after[i + 1], f_rows):
                continue
            if extend(i + 1, new):
                return True
        return False

    return extend(0, cand)


def brute_force_is_subgraph(h: Graph, f: Graph) -> bool:
    """Reference check: try injective maps vertex by vertex in index order.

    Only the edges towards already-mapped vertices are tested at each step;
    no degree filtering or look-ahead, so it shares no pruning logic with
    :func:`is_subgraph`.
    """
    if h.n > f.n:
        return False
    image = [-1] * h.n
    used = [False] * f.n

    def place(i: int) -> bool:
        if i == h.n:
            return True
        for x in range(f.n):
            if used[x]:
                continue
            if all(f.rows[x] >> image[j] & 1 for j in range(i) if h.rows[i] >> j & 1):
                image[i] = x
                used[x] = True
                if place(i + 1):
                    return True
                used[x] = False
        return False

    return place(0)


__all__ = [
    "GraphFamily",
    "brute_force_is_subgraph",
    "has_homomorphism",
    "is_minimal_image",
    "is_subgraph",
    "minimal_hom_images",
    "quotients",
]

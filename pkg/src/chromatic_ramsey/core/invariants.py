"""Exact graph invariants: clique, independence and chromatic numbers, girth."""

from __future__ import annotations

import functools
import heapq
from collections import deque

from ..errors import SizeLimitError
from .graph import Graph, complement, iter_bits, popcount

# Largest vertex count accepted by the exponential-time routines.
MAX_EXACT_VERTICES = 30


@functools.total_ordering
class _Infinite:
    """Girth of an acyclic (hyper)graph; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __mul__(self, k: int):
        if isinstance(k, int) and k > 0:
            return self
        return NotImplemented

    __rmul__ = __mul__

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def _check_size(g: Graph, what: str, limit: int = MAX_EXACT_VERTICES) -> None:
    if g.n > limit:
        raise SizeLimitError(f"{what} is limited to {limit} vertices, got {g.n}")


def _color_sort(rows, cand: int) -> tuple[list[int], list[int]]:
    # greedy colouring of `cand`; vertices listed by colour class with the
    # running colour count, which bounds the clique size among them
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            uncolored ^= low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(rows, cand: int, target: int | None = None) -> int:
    best = 0

    def expand(cand: int, size: int) -> bool:
        nonlocal best
        order, bounds = _color_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return False
            v = order[i]
            sub = cand & rows[v]
            if sub:
                if expand(sub, size + 1):
                    return True
            elif size + 1 > best:
                best = size + 1
                if target is not None and best >= target:
                    return True
            cand &= ~(1 << v)
        return False

    if cand:
        expand(cand, 0)
    return best


def clique_number(g: Graph) -> int:
    """Exact clique number by colour-bounded branch and bound."""
    _check_size(g, "clique_number")
    return _max_clique(g.rows, g.full_mask)


def independence_number(g: Graph) -> int:
    _check_size(g, "independence_number")
    return clique_number(complement(g))


def has_clique(g: Graph, k: int, within: int | None = None) -> bool:
    """True iff the vertices in ``within`` (default all) span a ``K_k``."""
    if k <= 0:
        return True
    cand = g.full_mask if within is None else within
    if popcount(cand) < k:
        return False
    if k == 1:
        return True
    return _max_clique(g.rows, cand, target=k) >= k


def has_independent_set(g: Graph, k: int, within: int | None = None) -> bool:
    return has_clique(complement(g), k, within)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> list[int] | None:
    side = [-1] * g.n
    adj = g.adjacency_lists()
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_proper_coloring(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring; ties go to higher degree, then lower index."""
    n = g.n
    adj = g.adjacency_lists()
    colors = [-1] * n
    used = [0] * n  # bitmask of colours seen in the neighbourhood
    heap = [(0, -len(adj[v]), v) for v in range(n)]
    heapq.heapify(heap)
    while heap:
        neg_sat, neg_deg, v = heapq.heappop(heap)
        if colors[v] >= 0 or -neg_sat != popcount(used[v]):
            continue
        c = 0
        while used[v] >> c & 1:
            c += 1
        colors[v] = c
        bit = 1 << c
        for w in adj[v]:
            if colors[w] < 0 and not used[w] & bit:
                used[w] |= bit
                heapq.heappush(heap, (-popcount(used[w]), -len(adj[w]), w))
    return colors


def _exact_chromatic(g: Graph, lower: int, upper: int) -> int:
    n = g.n
    rows = g.rows
    classes: list[int] = []
    best = upper
    uncolored_all = g.full_mask

    def saturation(v: int) -> int:
        row = rows[v]
        return sum(1 for cls in classes if cls & row)

    def search(uncolored: int) -> bool:
        nonlocal best
        if not uncolored:
            best = len(classes)
            return best <= lower
        v = -1
        vsat = -1
        for u in iter_bits(uncolored):
            s = saturation(u)
            if s > vsat:
                v, vsat = u, s
        bit = 1 << v
        row = rows[v]
        for c in range(len(classes)):
            if not classes[c] & row:
                classes[c] |= bit
                done = search(uncolored ^ bit)
                classes[c] ^= bit
                if done:
                    return True
        if len(classes) + 1 < best:
            classes.append(bit)
            done = search(uncolored ^ bit)
            classes.pop()
            if done:
                return True
        return False

    search(uncolored_all)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number.

    Cheap bounds (edgeless, bipartite, odd cycle + DSATUR) settle many inputs of
    any size; otherwise a DSATUR branch and bound runs, which is limited to
    ``MAX_EXACT_VERTICES`` vertices.
    """
    if g.n == 0:
        return 0
    if not any(g.rows):
        return 1
    if is_bipartite(g):
        return 2
    upper = max(dsatur_coloring(g)) + 1
    if upper == 3:
        return 3
    _check_size(g, "chromatic_number")
    lower = max(3, clique_number(g))
    if lower == upper:
        return upper
    return _exact_chromatic(g, lower, upper)


def girth(g: Graph):
    """Length of a shortest cycle, or ``INFINITE`` for a forest."""
    adj = g.adjacency_lists()
    n = g.n
    best = None
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if not adj[root]:
            continue
        dist[root] = 0
        seen = [root]
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                    seen.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
        for v in seen:
            dist[v] = -1
            parent[v] = -1
        if best == 3:
            break
    return INFINITE if best is None else best

"""Canonical labeling by individualization-refinement.

Equitable refinement of ordered partitions drives a search tree whose leaves
are discrete partitions, i.e. relabelings.  The canonical form is the leaf
whose graph6 bit string is smallest.  Automorphisms discovered between
leaves prune the tree in two ways: stabilizer orbits skip equivalent
children, and a verified automorphism back-jumps to the branching node.
"""

from __future__ import annotations

import functools

from ..errors import SizeLimitError
from .graph import Graph
from .graph6 import encode
from .invariants import MAX_EXACT_VERTICES

MAX_CANON_VERTICES = MAX_EXACT_VERTICES


def _refine(rows, cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    qi = 0
    n_cells = len(cells)
    total = sum(len(c) for c in cells)
    while qi < len(queue) and n_cells < total:
        splitter = queue[qi]
        qi += 1
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((rows[v] & splitter).bit_count(), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
                continue
            for k in sorted(buckets):
                frag = buckets[k]
                new_cells.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                queue.append(mask)
        cells = new_cells
        n_cells = len(cells)
    return cells


class _Search:
    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.rows = g.rows
        self.first = None  # (key, order, seq)
        self.best = None
        self.generators: list[list[int]] = []

    def key(self, order: list[int]) -> tuple[int, ...]:
        n = self.n
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = n - 1 - p
        rows = self.rows
        cols = []
        for j in range(1, n):
            row = rows[order[j]]
            rev = 0
            while row:
                low = row & -row
                rev |= 1 << pos[low.bit_length() - 1]
                row ^= low
            cols.append(rev >> (n - j))
        return tuple(cols)

    def _orbit_roots(self, seq: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[v] != v for v in seq):
                continue
            for v, w in enumerate(gamma):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _backjump(self, gamma: list[int], ref_seq: list[int], seq: list[int]):
        j = 0
        limit = min(len(ref_seq), len(seq))
        while j < limit and ref_seq[j] == seq[j]:
            j += 1
        if j == limit:
            return None
        if all(gamma[ref_seq[i]] == seq[i] for i in range(j + 1)):
            return j
        return None

    def leaf(self, cells: list[list[int]], seq: list[int]):
        order = [c[0] for c in cells]
        key = self.key(order)
        if self.first is None:
            self.first = self.best = (key, order, list(seq))
            return None
        for ref in (self.first, self.best):
            if key == ref[0]:
                gamma = [0] * self.n
                for p, v in enumerate(ref[1]):
                    gamma[v] = order[p]
                self.generators.append(gamma)
                return self._backjump(gamma, ref[2], seq)
        if key < self.best[0]:
            self.best = (key, order, list(seq))
        return None

    def search(self, cells: list[list[int]], seq: list[int]):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, seq)
        depth = len(seq)
        cell = sorted(cells[target])
        explored: list[int] = []
        for w in cell:
            if explored:
                roots = self._orbit_roots(seq)
                if roots[w] in {roots[e] for e in explored}:
                    continue
            explored.append(w)
            rest = [x for x in cells[target] if x != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            child = _refine(self.rows, child, [1 << w])
            seq.append(w)
            jump = self.search(child, seq)
            seq.pop()
            if jump is not None and jump < depth:
                return jump
        return None


@functools.lru_cache(maxsize=1 << 16)
def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order of the canonical labeling: position ``p`` holds old vertex ``order[p]``."""
    if g.n > MAX_CANON_VERTICES:
        raise SizeLimitError(f"canonical labeling is limited to {MAX_CANON_VERTICES} vertices")
    if g.n <= 1:
        return tuple(range(g.n))
    search = _Search(g)
    cells = _refine(g.rows, [list(range(g.n))], [g.full_mask])
    search.search(cells, [])
    return tuple(search.best[1])


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def canonical_key(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic."""
    return encode(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)

"""Named small graphs and circulant (Cayley) graphs on Z_m."""

from __future__ import annotations

import re
from typing import Iterable

from ..core import Graph, complete_graph, cycle_graph, join, make_graph, path_graph
from ..errors import GraphError

MOSER_SPINDLE_EDGES = [
    (0, 1), (0, 4), (0, 6), (1, 4), (1, 6), (2, 3),
    (2, 5), (2, 6), (3, 5), (3, 6), (4, 5),
]


def cayley_graph(modulus: int, connection: Iterable[int]) -> Graph:
    """Circulant graph: ``v ~ v + s (mod modulus)`` for ``s`` in the connection set.

    The set is closed under negation automatically.
    """
    if modulus < 1:
        raise GraphError("modulus must be positive")
    conn = set(connection)
    if not conn:
        raise GraphError("connection set must be nonempty")
    for s in conn:
        if not 0 < s < modulus:
            raise GraphError(f"connection element {s} outside 1..{modulus - 1}")
    edges = {
        (min(v, (v + s) % modulus), max(v, (v + s) % modulus))
        for v in range(modulus)
        for s in conn
    }
    return make_graph(modulus, edges)


def moser_spindle() -> Graph:
    return make_graph(7, MOSER_SPINDLE_EDGES)


def wheel(spokes: int) -> Graph:
    """Hub 0 joined to a cycle on 1..spokes."""
    return join(complete_graph(1), cycle_graph(spokes))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def paley17() -> Graph:
    return cayley_graph(17, {1, 2, 4, 8})


_FIXED = {
    "moser_spindle": moser_spindle,
    "moser": moser_spindle,
    "w5": lambda: wheel(5),
    "petersen": petersen_graph,
    "gamma": lambda: cayley_graph(8, {1, 2}),
    "paley17": paley17,
}
_SIZED = {"k": complete_graph, "c": cycle_graph, "path": path_graph, "w": wheel}
_SIZED_RE = re.compile(r"^(k|c|path|w)_?(\d+)$")

NAMES = sorted(_FIXED) + ["k<n>", "c<n>", "path<n>", "w<n>"]


def named_graph(name: str) -> Graph:
    """Look up a graph by name, e.g. ``moser_spindle``, ``gamma``, ``k4``, ``c5``, ``path3``."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = _SIZED_RE.match(key)
    if m:
        return _SIZED[m.group(1)](int(m.group(2)))
    raise GraphError(f"unknown graph name {name!r}; known: {', '.join(NAMES)}")

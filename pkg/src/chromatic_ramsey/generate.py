"""Level-by-level generation of graphs up to isomorphism by one-vertex extension."""

from __future__ import annotations

from typing import Callable, Iterable

from .core import Graph, add_vertex, canonical_form, empty_graph, graph6_encode
from .errors import BudgetExceededError

# accept(parent, neighbours_of_new_vertex, child) -> keep the child?
Acceptor = Callable[[Graph, int, Graph], bool]


def extend_level(
    level: Iterable[Graph], accept: Acceptor | None = None, max_graphs: int | None = None
) -> list[Graph]:
    """Canonical, deduplicated one-vertex extensions of ``level`` kept by ``accept``.

    The result is sorted by canonical graph6.  Exceeding ``max_graphs``
    raises instead of truncating.
    """
    seen: dict[bytes, Graph] = {}
    for g in level:
        for nbrs in range(1 << g.n):
            child = add_vertex(g, nbrs)
            if accept is not None and not accept(g, nbrs, child):
                continue
            c = canonical_form(child)
            key = graph6_encode(c)
            if key not in seen:
                seen[key] = c
                if max_graphs is not None and len(seen) > max_graphs:
                    raise BudgetExceededError(
                        f"more than {max_graphs} graphs on {g.n + 1} vertices"
                    )
    return [seen[k] for k in sorted(seen)]


def hereditary_levels(
    n: int, accept: Acceptor | None = None, max_graphs: int | None = None
) -> list[list[Graph]]:
    """Levels 0..n of a hereditary class given by a one-vertex acceptance test.

    Correct whenever every induced subgraph of a member is a member, so each
    member on k vertices is an extension of a member on k - 1 vertices.
    """
    levels = [[empty_graph(0)]]
    for _ in range(n):
        levels.append(extend_level(levels[-1], accept, max_graphs))
    return levels


def all_graphs(n: int) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism, in canonical form."""
    return hereditary_levels(n)[n]

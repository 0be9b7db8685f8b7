"""Largest graphs whose edges split into two parts, neither containing a fixed graph."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Graph, graph6_str, make_graph
from ..errors import SizeLimitError
from ..generate import all_graphs
from ..homo import is_subgraph

MAX_TURAN_ORDER = 7


@dataclass(frozen=True)
class TuranCertificate:
    host: Graph
    red: Graph
    blue: Graph

    def validate(self, forbidden: Graph) -> bool:
        red_edges = set(self.red.edges())
        blue_edges = set(self.blue.edges())
        return (
            red_edges.isdisjoint(blue_edges)
            and red_edges | blue_edges == set(self.host.edges())
            and not is_subgraph(forbidden, self.red)
            and not is_subgraph(forbidden, self.blue)
        )


def split_edges(host: Graph, forbidden: Graph) -> tuple[Graph, Graph] | None:
    """Red/blue split of the host's edges with neither class containing ``forbidden``."""
    edges = host.edges()
    if not edges:
        return make_graph(host.n), make_graph(host.n)
    classes: tuple[list, list] = ([], [])

    def place(i: int) -> bool:
        if i == len(edges):
            return True
        # the first edge may be red by colour symmetry
        for c in ((0,) if i == 0 else (0, 1)):
            classes[c].append(edges[i])
            if not is_subgraph(forbidden, make_graph(host.n, classes[c])) and place(i + 1):
                return True
            classes[c].pop()
        return False

    if not place(0):
        return None
    return make_graph(host.n, classes[0]), make_graph(host.n, classes[1])


def turan2_number(n: int, forbidden: Graph) -> tuple[int, TuranCertificate]:
    """Maximum edge count of an ``n``-vertex graph that is the union of two
    ``forbidden``-free graphs, with a host and split attaining it.

    Hosts are tried in decreasing edge count (ties by canonical graph6), so
    the first splittable host is optimal.
    """
    if n > MAX_TURAN_ORDER:
        raise SizeLimitError(f"turan2_number is limited to n <= {MAX_TURAN_ORDER}")
    hosts = sorted(all_graphs(n), key=lambda g: (-g.num_edges(), graph6_str(g)))
    for host in hosts:
        split = split_edges(host, forbidden)
        if split is not None:
            cert = TuranCertificate(host, *split)
            return host.num_edges(), cert
    raise AssertionError("the edgeless host always splits")  # pragma: no cover

"""Tensor products over all small graphs of large fractional chromatic number."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core import Graph, complete_graph, join, make_graph, tensor_product
from ..errors import BudgetExceededError, CapacityError, GraphError
from ..fractional import fractional_chromatic_number
from ..generate import all_graphs
from ..homo import GraphFamily

DEFAULT_PRODUCT_BUDGET = 1024


@dataclass(frozen=True)
class ZhuSpec:
    """Family parameters: factors have ``chi_f > level - 1`` and at most ``n`` vertices.

    ``reduced`` keeps one isolate-free representative per isomorphism class;
    otherwise every labelled graph on a subset of ``{0..n-1}`` is a factor.
    """

    level: int
    n: int
    reduced: bool = True

    def __post_init__(self) -> None:
        if self.level < 1 or self.n < 1:
            raise GraphError("level and n must be positive")
        if self.level > self.n:
            raise GraphError(f"level {self.level} exceeds n = {self.n}")


def _reduced_family(spec: ZhuSpec) -> GraphFamily:
    if spec.level == 1:
        return GraphFamily([complete_graph(1)])
    threshold = spec.level - 1
    members = []
    for m in range(2, spec.n + 1):
        for g in all_graphs(m):
            if all(g.rows) and fractional_chromatic_number(g) > threshold:
                members.append(g)
    return GraphFamily(members)


def _labelled_family(spec: ZhuSpec, max_members: int) -> list[Graph]:
    threshold = spec.level - 1
    out = []
    for size in range(1, spec.n + 1):
        for _subset in combinations(range(spec.n), size):
            # the graph only depends on the subset through its size
            pairs = list(combinations(range(size), 2))
            for mask in range(1 << len(pairs)):
                g = make_graph(size, [p for b, p in enumerate(pairs) if mask >> b & 1])
                if fractional_chromatic_number(g) > threshold:
                    out.append(g)
                    if len(out) > max_members:
                        raise BudgetExceededError(f"more than {max_members} labelled factors")
    return out


def zhu_family(spec: ZhuSpec, max_members: int = 10_000) -> GraphFamily | list[Graph]:
    """The factor family: a ``GraphFamily`` when reduced, a labelled list otherwise."""
    if spec.reduced:
        return _reduced_family(spec)
    return _labelled_family(spec, max_members)


def zhu_graph(spec: ZhuSpec, max_vertices: int = DEFAULT_PRODUCT_BUDGET) -> Graph:
    """Iterated tensor product of the family in its iteration order."""
    factors = list(zhu_family(spec))
    if not factors:
        raise GraphError(f"empty factor family for {spec}")
    size = 1
    for f in factors:
        size *= f.n
        if size > max_vertices:
            raise CapacityError(
                f"product for {spec} exceeds {max_vertices} vertices"
                f" ({len(factors)} factors)"
            )
    result = factors[0]
    for f in factors[1:]:
        result = tensor_product(result, f)
    return result


def bel_join(k: int, i: int, spec: ZhuSpec, max_vertices: int = DEFAULT_PRODUCT_BUDGET) -> Graph:
    """``K_{k-i}`` joined to the product graph of ``spec`` (whose level must be ``i``)."""
    if not 1 <= i <= k:
        raise GraphError(f"need 1 <= i <= k, got i={i}, k={k}")
    if spec.level != i:
        raise GraphError(f"spec level {spec.level} does not match i = {i}")
    return join(complete_graph(k - i), zhu_graph(spec, max_vertices))

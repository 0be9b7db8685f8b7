"""Fractional chromatic number via the independent-set covering LP, solved exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Graph, complement, induced_subgraph, iter_bits
from .errors import BudgetExceededError, ChromaticRamseyError, SizeLimitError
from .lp import GE, LE, solve_lp

MAX_FRACTIONAL_VERTICES = 30
MAX_INDEPENDENT_SETS = 200_000


def _maximal_cliques(rows, n: int, limit: int) -> list[int]:
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > limit:
                raise BudgetExceededError(f"more than {limit} maximal independent sets")
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: ((p & rows[u]).bit_count(), -u))
        for v in iter_bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return found


def maximal_independent_sets(
    g: Graph, max_vertices: int = MAX_FRACTIONAL_VERTICES, max_sets: int = MAX_INDEPENDENT_SETS
) -> list[tuple[int, ...]]:
    """Every inclusion-maximal independent set once, as sorted tuples in sorted order."""
    if g.n > max_vertices:
        raise SizeLimitError(f"independent-set enumeration is limited to {max_vertices} vertices")
    masks = _maximal_cliques(complement(g).rows, g.n, max_sets)
    return sorted(tuple(iter_bits(m)) for m in masks)


def _components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def covering_lp(n: int, sets: list[tuple[int, ...]]):
    """min sum x_I  s.t.  sum_{I containing v} x_I >= 1 for each vertex, x >= 0."""
    a = [[1 if v in s else 0 for s in sets] for v in range(n)]
    return solve_lp([1] * len(sets), a, [GE] * n, [1] * n)


def packing_lp(n: int, sets: list[tuple[int, ...]]):
    """max sum y_v  s.t.  sum_{v in I} y_v <= 1 for each set, y >= 0 (fractional clique)."""
    a = [[1 if v in s else 0 for v in range(n)] for s in sets]
    return solve_lp([1] * n, a, [LE] * len(sets), [1] * len(sets), maximize=True)


@dataclass
class FractionalCertificate:
    """Optimal fractional colouring and fractional clique of equal value."""

    value: Fraction
    sets: list[tuple[int, ...]]
    set_weights: list[Fraction]
    vertex_weights: list[Fraction]

    def check(self, n: int) -> None:
        """Raise unless both weightings are feasible and have the same total.

        Passing proves optimality of both by weak duality.
        """
        x, y = self.set_weights, self.vertex_weights
        if any(w < 0 for w in x) or any(w < 0 for w in y):
            raise ChromaticRamseyError("negative LP weight")
        for v in range(n):
            if sum((x[k] for k, s in enumerate(self.sets) if v in s), Fraction(0)) < 1:
                raise ChromaticRamseyError(f"vertex {v} is under-covered")
        for s in self.sets:
            if sum((y[v] for v in s), Fraction(0)) > 1:
                raise ChromaticRamseyError(f"independent set {s} over-packed")
        if sum(x, Fraction(0)) != self.value or sum(y, Fraction(0)) != self.value:
            raise ChromaticRamseyError("colouring and clique weights differ from the value")


def _certificate(g: Graph) -> FractionalCertificate:
    if g.n > MAX_FRACTIONAL_VERTICES:
        raise SizeLimitError(f"fractional chromatic number is limited to {MAX_FRACTIONAL_VERTICES} vertices")
    if g.n == 0:
        return FractionalCertificate(Fraction(0), [], [], [])
    sets = maximal_independent_sets(g)
    # the packing side starts from a feasible slack basis; its multipliers
    # are an optimal covering
    res = packing_lp(g.n, sets)
    if res.status != "optimal":
        raise ChromaticRamseyError(f"packing LP ended with status {res.status}")
    cert = FractionalCertificate(res.value, sets, res.duals, res.x)
    cert.check(g.n)
    return cert


def fractional_chromatic_number(g: Graph) -> Fraction:
    """Exact fractional chromatic number (0 for the null graph).

    The value of a graph is the maximum over its connected components.
    """
    best = Fraction(0)
    for comp in _components(g):
        best = max(best, _certificate(induced_subgraph(g, comp)).value)
    return best


def fractional_certificate(g: Graph) -> FractionalCertificate:
    """Optimal covering by independent sets and fractional clique, checked exactly."""
    return _certificate(g)

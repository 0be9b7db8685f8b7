"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's search code; graphs are read through
``Graph.n`` / ``Graph.has_edge`` only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def edge_set(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)}


def is_clique(g, vs):
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(g, vs):
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def clique_number(g):
    return max((k for k in range(g.n + 1) for vs in combinations(range(g.n), k) if is_clique(g, vs)), default=0)


def independence_number(g):
    return max(
        (k for k in range(g.n + 1) for vs in combinations(range(g.n), k) if is_independent(g, vs)),
        default=0,
    )


def chromatic_number(g):
    """Smallest k admitting some proper colouring among all k^n assignments."""
    if g.n == 0:
        return 0
    edges = edge_set(g)
    for k in range(1, g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in edges):
                return k
    raise AssertionError


def girth(g):
    """Shortest cycle by enumerating vertex sequences; None for forests."""
    for length in range(3, g.n + 1):
        for start in range(g.n):
            for rest in permutations([v for v in range(g.n) if v > start], length - 1):
                cyc = (start,) + rest
                if all(g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)):
                    return length
    return None


def isomorphic(g, h):
    if g.n != h.n:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    for p in permutations(range(g.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in eh for u, v in eg):
            return True
    return False


def has_homomorphism(g, h):
    edges = edge_set(g)
    for f in product(range(h.n), repeat=g.n):
        if all(h.has_edge(f[u], f[v]) for u, v in edges):
            return True
    return g.n == 0


def maximal_independent_sets(g):
    sets = [
        vs for k in range(g.n + 1) for vs in combinations(range(g.n), k) if is_independent(g, vs)
    ]
    return sorted(
        s for s in sets
        if all(not is_independent(g, s + (v,)) for v in range(g.n) if v not in s)
    )


def all_independent_sets(g):
    return [
        vs for k in range(1, g.n + 1) for vs in combinations(range(g.n), k) if is_independent(g, vs)
    ]


def graph6(g) -> str:
    """Straight transcription of the format: size byte, then the bit string
    x(0,1) x(0,2) x(1,2) x(0,3) ... padded to a multiple of six."""
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    body = [int(bits[k:k + 6], 2) for k in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in head + body)


def contains_monochromatic(n, red_edges, family_edges):
    """Does the colouring of K_n with the given red edges contain a member in one colour?"""
    all_pairs = set(combinations(range(n), 2))
    blue_edges = all_pairs - red_edges
    for colour in (red_edges, blue_edges):
        for hn, hedges in family_edges:
            if hn > n:
                continue
            for image in permutations(range(n), hn):
                if all((min(image[u], image[v]), max(image[u], image[v])) in colour for u, v in hedges):
                    return True
    return False


def family_ramsey_number(family, n_max):
    """Least N such that every colouring of K_N (all 2^C(N,2) of them) is forced."""
    family_edges = [(h.n, sorted(edge_set(h))) for h in family]
    for n in range(n_max + 1):
        pairs = list(combinations(range(n), 2))
        forced = True
        for mask in range(1 << len(pairs)):
            red = {p for b, p in enumerate(pairs) if mask >> b & 1}
            if not contains_monochromatic(n, red, family_edges):
                forced = False
                break
        if forced:
            return n
    return None


def turan2(n, h):
    """Max edges over all assignments absent/red/blue of the pairs of K_n."""
    pairs = list(combinations(range(n), 2))
    hedges = sorted(edge_set(h))
    best = 0

    def free(edges):
        for image in permutations(range(n), h.n):
            if all((min(image[u], image[v]), max(image[u], image[v])) in edges for u, v in hedges):
                return False
        return True

    for assign in product((0, 1, 2), repeat=len(pairs)):
        m = sum(1 for a in assign if a)
        if m <= best:
            continue
        red = {p for p, a in zip(pairs, assign) if a == 1}
        blue = {p for p, a in zip(pairs, assign) if a == 2}
        if free(red) and free(blue):
            best = m
    return best


def fractional_lower_bound(g):
    return Fraction(g.n, independence_number(g)) if g.n else Fraction(0)

from __future__ import annotations

from hypothesis import given

import oracles
from conftest import graphs, random_graph
from chromatic_ramsey.constructions import ZhuSpec, cayley_graph, moser_spindle, petersen_graph, wheel, zhu_graph
from chromatic_ramsey.core import (
    chromatic_number,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    empty_graph,
    is_isomorphic,
    path_graph,
    tensor_product,
)
from chromatic_ramsey.generate import all_graphs
from chromatic_ramsey.homo import (
    GraphFamily,
    brute_force_is_subgraph,
    has_homomorphism,
    minimal_hom_images,
    quotients,
    is_subgraph,
)


def same_family(fam, expected):
    return fam == GraphFamily(expected) and len(fam) == len(expected)


class TestHomomorphism:
    def test_examples(self):
        assert has_homomorphism(cycle_graph(5), complete_graph(3))
        assert not has_homomorphism(complete_graph(3), cycle_graph(5))
        z33 = zhu_graph(ZhuSpec(3, 3))
        assert has_homomorphism(z33, complete_graph(3))
        assert has_homomorphism(complete_graph(3), z33)

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_matches_oracle(self, g, h):
        assert has_homomorphism(g, h) == oracles.has_homomorphism(g, h)

    @given(graphs(min_n=1, max_n=8))
    def test_maps_to_clique_of_chromatic_size(self, g):
        assert has_homomorphism(g, complete_graph(chromatic_number(g)))

    @given(graphs(max_n=6), graphs(max_n=6), graphs(max_n=6))
    def test_transitive(self, a, b, c):
        if has_homomorphism(a, b) and has_homomorphism(b, c):
            assert has_homomorphism(a, c)

    @given(graphs(max_n=4), graphs(max_n=4))
    def test_product_projects_to_factors(self, g, h):
        p = tensor_product(g, h)
        assert has_homomorphism(p, g)
        assert has_homomorphism(p, h)


class TestQuotients:
    def test_triangle(self):
        assert same_family(quotients(complete_graph(3)), [complete_graph(3)])

    def test_path(self):
        assert same_family(quotients(path_graph(3)), [path_graph(3), complete_graph(2)])

    def test_c5_has_triangle_quotient(self):
        assert complete_graph(3) in quotients(cycle_graph(5))

    @given(graphs(max_n=6))
    def test_every_quotient_is_an_image(self, g):
        for q in quotients(g):
            assert has_homomorphism(g, q)
            assert q.n <= g.n

    def test_quotient_count_of_c5(self):
        # C5 itself, C5 with one merge (a triangle with a pendant path), K3
        qs = quotients(cycle_graph(5))
        assert [q.n for q in qs] == [3, 4, 5]


class TestMinimalImages:
    def test_moser_spindle(self):
        fam = minimal_hom_images(moser_spindle())
        assert same_family(fam, [complete_graph(4), wheel(5), moser_spindle()])

    def test_gamma(self):
        gamma = cayley_graph(8, {1, 2})
        assert same_family(minimal_hom_images(gamma), [complete_graph(4), gamma])

    def test_c5(self):
        assert same_family(minimal_hom_images(cycle_graph(5)), [complete_graph(3), cycle_graph(5)])

    def test_members_are_minimal_by_oracle(self):
        g = cycle_graph(5)
        for h in minimal_hom_images(g):
            assert oracles.has_homomorphism(g, h)
            for u, v in h.edges():
                assert not oracles.has_homomorphism(g, delete_edge(h, u, v))
            for v in range(h.n):
                assert not oracles.has_homomorphism(g, delete_vertex(h, v))

    def test_members_pairwise_incomparable(self):
        fam = list(minimal_hom_images(moser_spindle()))
        for a in fam:
            for b in fam:
                if a is not b:
                    assert not is_subgraph(a, b)

    def test_every_small_image_contains_a_member(self):
        small = [g for n in range(1, 7) for g in all_graphs(n)]
        for g in small:
            fam = list(minimal_hom_images(g))
            for h in small:
                if h.n <= g.n and has_homomorphism(g, h):
                    assert any(is_subgraph(m, h) for m in fam), (g, h)

    def test_chromatic_clique_contains_a_member(self):
        for g in all_graphs(5):
            k = complete_graph(chromatic_number(g))
            assert any(is_subgraph(m, k) for m in minimal_hom_images(g))


class TestSubgraph:
    def test_examples(self):
        assert is_subgraph(wheel(5), complete_graph(6))
        assert not is_subgraph(complete_graph(3), cycle_graph(5))
        assert is_subgraph(cycle_graph(5), petersen_graph())
        assert brute_force_is_subgraph(cycle_graph(5), petersen_graph())
        assert not is_subgraph(complete_graph(4), complete_graph(3))
        assert is_subgraph(empty_graph(0), complete_graph(2))

    def test_random_pairs_match_brute_force(self, rng):
        for _ in range(1000):
            h = random_graph(rng, rng.randint(1, 6), rng.random())
            f = random_graph(rng, rng.randint(1, 9), rng.random())
            assert is_subgraph(h, f) == brute_force_is_subgraph(h, f), (h, f)

    @given(graphs(max_n=5), graphs(max_n=7))
    def test_matches_brute_force(self, h, f):
        assert is_subgraph(h, f) == brute_force_is_subgraph(h, f)

    def test_petersen_contains_no_short_cycles(self):
        p = petersen_graph()
        assert not is_subgraph(cycle_graph(4), p)
        assert is_subgraph(cycle_graph(6), p)
        assert is_subgraph(cycle_graph(9), p)


class TestFamily:
    def test_order_and_dedup(self):
        fam = GraphFamily([complete_graph(3), cycle_graph(3), path_graph(3), complete_graph(2)])
        assert len(fam) == 3
        assert [g.n for g in fam] == [2, 3, 3]
        assert [g.num_edges() for g in fam] == [1, 2, 3]
        assert is_isomorphic(fam[2], complete_graph(3))
        assert fam.without(complete_graph(3)) == GraphFamily([path_graph(3), complete_graph(2)])

from __future__ import annotations

import pytest
from hypothesis import given

import oracles
from conftest import graphs, random_graph, random_permutation
from chromatic_ramsey.constructions import cayley_graph, moser_spindle, paley17, petersen_graph
from chromatic_ramsey.core import (
    canonical_form,
    canonical_key,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_isomorphic,
    make_graph,
    path_graph,
)
from chromatic_ramsey.errors import SizeLimitError


def test_relabelled_cycle():
    a = make_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert canonical_form(a) == canonical_form(cycle_graph(5))


def test_distinguishes():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))
    assert not is_isomorphic(complete_graph(4), cycle_graph(4))


def test_is_isomorphic_examples():
    assert is_isomorphic(cycle_graph(5), complement(cycle_graph(5)))
    assert is_isomorphic(complete_graph(3), cycle_graph(3))


def test_thousand_permutations_of_one_graph(rng):
    g = random_graph(rng, 8)
    expected = canonical_form(g)
    for _ in range(1000):
        assert canonical_form(random_permutation(rng, g)) == expected


def test_thousand_random_cases(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        assert canonical_key(random_permutation(rng, g)) == canonical_key(g)


@pytest.mark.parametrize(
    "g", [petersen_graph(), paley17(), cayley_graph(8, {1, 2}), moser_spindle(), empty_graph(30), complete_graph(30)]
)
def test_symmetric_graphs(g, rng):
    c = canonical_form(g)
    for _ in range(5):
        assert canonical_form(random_permutation(rng, g)) == c


@given(graphs(max_n=6), graphs(max_n=6))
def test_agrees_with_permutation_oracle(g, h):
    assert is_isomorphic(g, h) == oracles.isomorphic(g, h)


def test_form_is_isomorphic_to_input(rng):
    for _ in range(50):
        g = random_graph(rng, 7)
        assert oracles.isomorphic(canonical_form(g), g)


def test_size_limit():
    with pytest.raises(SizeLimitError):
        canonical_form(empty_graph(31))

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from chromatic_ramsey.core import Graph, make_graph

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, b in zip(pairs, bits) if b])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return make_graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_permutation(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)

"""Graph values, operators, exact invariants, graph6 and canonical labeling."""

from .canon import canonical_form, canonical_key, canonical_order, is_isomorphic
from .graph import (
    CAPACITY,
    Graph,
    add_vertex,
    complement,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_rows,
    induced_subgraph,
    iter_bits,
    join,
    make_graph,
    path_graph,
    popcount,
    remove_isolated,
    tensor_product,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .graph6 import encode_str as graph6_str
from .invariants import (
    INFINITE,
    MAX_EXACT_VERTICES,
    chromatic_number,
    clique_number,
    dsatur_coloring,
    girth,
    has_clique,
    has_independent_set,
    independence_number,
    is_bipartite,
    is_proper_coloring,
)

__all__ = [
    "CAPACITY",
    "INFINITE",
    "MAX_EXACT_VERTICES",
    "Graph",
    "add_vertex",
    "canonical_form",
    "canonical_key",
    "canonical_order",
    "chromatic_number",
    "clique_number",
    "complement",
    "complete_graph",
    "cycle_graph",
    "delete_edge",
    "delete_vertex",
    "disjoint_union",
    "dsatur_coloring",
    "empty_graph",
    "from_rows",
    "girth",
    "graph6_decode",
    "graph6_encode",
    "graph6_str",
    "has_clique",
    "has_independent_set",
    "independence_number",
    "induced_subgraph",
    "is_bipartite",
    "is_isomorphic",
    "is_proper_coloring",
    "iter_bits",
    "join",
    "make_graph",
    "path_graph",
    "popcount",
    "remove_isolated",
    "tensor_product",
]

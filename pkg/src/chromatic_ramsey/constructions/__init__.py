"""Named graphs, product families, joins, hypergraph builds and 2-colour Turan numbers."""

from .hypergraph import (
    Hypergraph,
    compose,
    fano_plane,
    find_high_girth_hypergraph,
    from_graph,
    hypergraph_chromatic_number,
    hypergraph_girth,
    make_hypergraph,
    parse_hypergraph,
    read_hypergraph,
)
from .named import NAMES, cayley_graph, moser_spindle, named_graph, paley17, petersen_graph, wheel
from .turan import TuranCertificate, split_edges, turan2_number
from .tutte import tutte_graph, tutte_step
from .zhu import ZhuSpec, bel_join, zhu_family, zhu_graph

__all__ = [
    "NAMES",
    "Hypergraph",
    "TuranCertificate",
    "ZhuSpec",
    "bel_join",
    "cayley_graph",
    "compose",
    "fano_plane",
    "find_high_girth_hypergraph",
    "from_graph",
    "hypergraph_chromatic_number",
    "hypergraph_girth",
    "make_hypergraph",
    "moser_spindle",
    "named_graph",
    "paley17",
    "parse_hypergraph",
    "petersen_graph",
    "read_hypergraph",
    "split_edges",
    "tutte_graph",
    "tutte_step",
    "turan2_number",
    "wheel",
    "zhu_family",
    "zhu_graph",
]

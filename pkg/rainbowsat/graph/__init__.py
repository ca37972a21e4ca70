from .coloring_io import format_coloring, parse_coloring, read_colored_graph, read_graph
from .graph6 import decode_graph6, encode_graph6
from .paths import enumerate_paths, is_connected, iter_colored_paths, min_degree

__all__ = [
    "decode_graph6",
    "encode_graph6",
    "enumerate_paths",
    "format_coloring",
    "is_connected",
    "iter_colored_paths",
    "min_degree",
    "parse_coloring",
    "read_colored_graph",
    "read_graph",
]

from .canonical import canonical_code, canonical_form, canonical_graph
from .checkpoint import Certificate, SearchCheckpoint, read_checkpoint, write_checkpoint
from .colorings import bell_number, enumerate_colorings, iter_restricted_growth
from .generate import enumerate_graphs
from .rsat import SearchResult, SearchTask, compute_rsat

__all__ = [
    "Certificate",
    "SearchCheckpoint",
    "SearchResult",
    "SearchTask",
    "bell_number",
    "canonical_code",
    "canonical_form",
    "canonical_graph",
    "compute_rsat",
    "enumerate_colorings",
    "enumerate_graphs",
    "iter_restricted_growth",
    "read_checkpoint",
    "write_checkpoint",
]

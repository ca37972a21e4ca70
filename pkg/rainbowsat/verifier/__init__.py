from .conditions import check_necessity_avoidance, check_rainbow_iff, check_sufficiency_disjoint_paths
from .cycles import find_cycle, find_rainbow_cycle
from .lemmas import complete_graph_path_lemma
from .saturation import is_rainbow_saturated
from .witness import verify_witness_table

__all__ = [
    "check_necessity_avoidance",
    "check_rainbow_iff",
    "check_sufficiency_disjoint_paths",
    "complete_graph_path_lemma",
    "find_cycle",
    "find_rainbow_cycle",
    "is_rainbow_saturated",
    "verify_witness_table",
]

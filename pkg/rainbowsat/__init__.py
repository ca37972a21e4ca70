try:
    from . import _version

    __version__ = _version.__version__
except:  # noqa: E722
    __version__ = "0.0.0-dev"

from rainbowsat.exceptions import (
    BudgetExceededError,
    ParameterError,
    ParseError,
    RainbowSatError,
    RejectedInputError,
)
from rainbowsat.families import build
from rainbowsat.models.coloring import ColoredGraph, EdgeColoring
from rainbowsat.models.family import Construction, parse_family_spec
from rainbowsat.models.graph import Edge, PathWitness, SimpleGraph
from rainbowsat.search import SearchTask, compute_rsat
from rainbowsat.verifier import check_rainbow_iff, is_rainbow_saturated

__all__ = [
    # Graphs
    "SimpleGraph",
    "Edge",
    "PathWitness",
    "EdgeColoring",
    "ColoredGraph",
    # Constructions
    "Construction",
    "build",
    "parse_family_spec",
    # Verification and search
    "is_rainbow_saturated",
    "check_rainbow_iff",
    "SearchTask",
    "compute_rsat",
    # Exceptions
    "RainbowSatError",
    "ParameterError",
    "RejectedInputError",
    "ParseError",
    "BudgetExceededError",
    # Version
    "__version__",
]

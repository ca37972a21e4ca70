"""Resumable search progress stored as JSON."""

import logging
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from ..exceptions import ParseError
from ..models.coloring import EdgeColoring

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1

SearchMode = Literal["all_colorings", "rainbow_only"]


class Certificate(BaseModel):
    """A graph together with a coloring that is C_r-rainbow saturated."""

    graph6: str = Field(..., description="Canonical graph in graph6 form")
    coloring: EdgeColoring

    @property
    def edge_count(self) -> int:
        return len(self.coloring)


class SearchCheckpoint(BaseModel):
    """Where a search stopped.

    Attributes:
        m: Edge count being searched
        done: Graph classes of level ``m`` already evaluated, in generation order
        last_graph6: The last evaluated class, used to check that generation replays identically
        certificates: Certificates found so far at level ``m``
    """

    schema_version: int = CHECKPOINT_VERSION
    n: int
    r: int
    mode: SearchMode
    m: int
    done: int = 0
    last_graph6: str | None = None
    certificates: list[Certificate] = Field(default_factory=list)
    graphs_examined: int = 0
    colorings_examined: int = 0

    def matches(self, n: int, r: int, mode: str) -> bool:
        return (self.n, self.r, self.mode) == (n, r, mode)


def write_checkpoint(path: Path, checkpoint: SearchCheckpoint) -> None:
    staging = path.with_suffix(path.suffix + ".tmp")
    staging.write_text(checkpoint.model_dump_json(indent=2))
    staging.replace(path)
    logger.debug(f"Checkpoint at m={checkpoint.m}, {checkpoint.done} classes done, written to {path}")


def read_checkpoint(path: Path) -> SearchCheckpoint:
    """Load a checkpoint file.

    Raises:
        ParseError: If the file is not a valid checkpoint.
    """
    try:
        return SearchCheckpoint.model_validate_json(path.read_text())
    except ValidationError as e:
        raise ParseError(f"{path} is not a search checkpoint: {e.errors()[0]['msg']}") from e

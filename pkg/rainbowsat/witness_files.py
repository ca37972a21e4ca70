"""Witness table files.

A witness file lists, per nonedge, the paths that certify it::

    # comments start with '#'
    family omega n=15 partition=6,3,3,3
    r 5
    mode cover

    nonedge 5 12
    path 5 4 0 2 12
    path 5 0 2 11 12

``family`` and ``r`` are optional. A ``mode`` line before the first
``nonedge`` sets the default; inside an entry it applies to that entry only.
``cover`` asks for paths that together avoid every edge, ``pair`` for two
edge-disjoint paths with a rainbow union.
"""

import logging
from importlib import resources
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from .exceptions import ParameterError, ParseError
from .models.coloring import EdgeColoring
from .models.family import FamilySpec, parse_family_spec
from .models.graph import Edge, PathWitness, SimpleGraph
from .models.report import WitnessOutcome
from .verifier.witness import WitnessMode, verify_witness_table

logger = logging.getLogger(__name__)

MODES: dict[str, WitnessMode] = {"cover": "edge_cover", "pair": "disjoint_rainbow_pair"}
BUNDLED_TABLES = ("table1", "table2", "table3", "table4")


class WitnessEntry(BaseModel):
    nonedge: Edge
    mode: WitnessMode
    paths: tuple[PathWitness, ...]
    line: int = Field(..., description="Line of the entry's nonedge directive")


class WitnessFile(BaseModel):
    family: FamilySpec | None = None
    r: int | None = None
    entries: list[WitnessEntry] = Field(default_factory=list)


def _integers(fields: list[str], number: int) -> list[int]:
    try:
        values = [int(field) for field in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", line=number) from None
    if any(value < 0 for value in values):
        raise ParseError("vertex ids must be non-negative", line=number)
    return values


def _family_value(raw: str) -> Any:
    if "," in raw:
        return tuple(int(part) for part in raw.split(","))
    return int(raw) if raw.lstrip("-").isdigit() else raw


def _parse_family(fields: list[str], number: int) -> FamilySpec:
    if not fields:
        raise ParseError("family directive needs a family name", line=number)
    data: dict[str, Any] = {"family": fields[0]}
    for field in fields[1:]:
        key, sep, raw = field.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {field!r}", line=number)
        try:
            data[key] = _family_value(raw)
        except ValueError:
            raise ParseError(f"bad value in {field!r}", line=number) from None
    try:
        return parse_family_spec(data)
    except ValidationError as e:
        raise ParseError(f"invalid family: {e.errors()[0]['msg']}", line=number) from None


def parse_witness_file(text: str) -> WitnessFile:
    """Parse a witness file.

    Raises:
        ParseError: With the line number of the first malformed line.
    """
    parsed = WitnessFile()
    default_mode: WitnessMode | None = None
    current: dict[str, Any] | None = None
    entries: list[dict[str, Any]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        if keyword == "family":
            if entries:
                raise ParseError("family must come before the first nonedge", line=number)
            parsed.family = _parse_family(fields, number)
        elif keyword == "r":
            values = _integers(fields, number)
            if len(values) != 1 or values[0] < 3:
                raise ParseError("r takes one integer of at least 3", line=number)
            parsed.r = values[0]
        elif keyword == "mode":
            if len(fields) != 1 or fields[0] not in MODES:
                raise ParseError(f"mode must be one of {', '.join(MODES)}", line=number)
            if current is None:
                default_mode = MODES[fields[0]]
            else:
                current["mode"] = MODES[fields[0]]
        elif keyword == "nonedge":
            values = _integers(fields, number)
            if len(values) != 2 or values[0] == values[1]:
                raise ParseError("nonedge takes two distinct vertices", line=number)
            current = {"nonedge": Edge.of(*values), "mode": default_mode, "paths": [], "line": number}
            entries.append(current)
        elif keyword == "path":
            if current is None:
                raise ParseError("path listed before any nonedge", line=number)
            values = _integers(fields, number)
            if len(values) < 2:
                raise ParseError("a path needs at least two vertices", line=number)
            current["paths"].append(PathWitness(vertices=tuple(values)))
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=number)

    for entry in entries:
        if entry["mode"] is None:
            raise ParseError("entry has no mode and the file sets no default", line=entry["line"])
        if not entry["paths"]:
            raise ParseError(f"nonedge {entry['nonedge']} lists no paths", line=entry["line"])
        parsed.entries.append(WitnessEntry(**entry))
    return parsed


def read_witness_file(path: Path) -> WitnessFile:
    return parse_witness_file(path.read_text())


def bundled_witness_text(name: str) -> str:
    """Return the text of a bundled witness table such as ``table1``.

    Raises:
        ParameterError: If no table has that name.
    """
    if name not in BUNDLED_TABLES:
        raise ParameterError(f"no bundled witness table {name!r}", f"table is one of {', '.join(BUNDLED_TABLES)}")
    return resources.files("rainbowsat").joinpath("data", "witnesses", f"{name}.txt").read_text()


def replay_witnesses(
    g: SimpleGraph,
    witnesses: WitnessFile,
    coloring: EdgeColoring | None = None,
) -> list[WitnessOutcome]:
    """Check every entry of a witness file against ``g``."""
    outcomes = []
    for entry in witnesses.entries:
        outcome = verify_witness_table(g, entry.nonedge, entry.paths, entry.mode, r=witnesses.r, coloring=coloring)
        if not outcome.passed:
            logger.debug(f"Witness entry at line {entry.line} failed: {outcome.failure}")
        outcomes.append(outcome)
    return outcomes

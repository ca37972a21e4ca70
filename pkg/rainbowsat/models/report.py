"""Result models produced by the verifier.

All reports serialize to plain JSON: vertices and nonedges as integer arrays,
colors as integers and the fresh-color marker as the string ``"fresh"``.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .graph import CycleWitness, Edge, PathWitness

SCHEMA_VERSION = 1
FRESH = "fresh"

Verdict = Literal["saturated", "contains_rainbow_copy", "unsaturated"]


class NonedgeEvidence(BaseModel):
    """Rainbow paths through one nonedge whose color sets have no common color.

    Closing any of the paths with the nonedge gives a C_r; together they show
    that every existing color class is avoided by one of them.
    """

    model_config = ConfigDict(frozen=True)

    nonedge: Edge
    paths: tuple[PathWitness, ...]


class SaturationReport(BaseModel):
    """Verdict of a rainbow saturation check plus the evidence behind it.

    Attributes:
        verdict: ``saturated``, ``contains_rainbow_copy`` or ``unsaturated``
        r: Cycle length checked
        rainbow_copy: A rainbow C_r already present in the graph
        failing_nonedge: First nonedge whose addition can avoid a rainbow C_r
        failing_color: Color that can be given to ``failing_nonedge``, or ``"fresh"``
            when no rainbow path joins its ends at all
        per_nonedge_evidence: For a saturated verdict, the witness paths of every nonedge
        vacuous: True when the graph is complete so no nonedge had to be checked
    """

    schema_version: int = SCHEMA_VERSION
    verdict: Verdict
    r: int
    rainbow_copy: CycleWitness | None = None
    failing_nonedge: Edge | None = None
    failing_color: int | Literal["fresh"] | None = None
    per_nonedge_evidence: list[NonedgeEvidence] | None = None
    vacuous: bool = False

    @model_validator(mode="after")
    def validate_evidence(self) -> "SaturationReport":
        if self.verdict == "contains_rainbow_copy" and self.rainbow_copy is None:
            raise ValueError("a contains_rainbow_copy verdict needs the rainbow copy")
        if self.verdict == "unsaturated" and (self.failing_nonedge is None or self.failing_color is None):
            raise ValueError("an unsaturated verdict needs a failing nonedge and color")
        return self

    @property
    def is_saturated(self) -> bool:
        return self.verdict == "saturated"

    def __str__(self) -> str:
        if self.verdict == "contains_rainbow_copy":
            return f"contains a rainbow C_{self.r}: {self.rainbow_copy}"
        if self.verdict == "unsaturated":
            assert self.failing_nonedge is not None
            return (
                f"not C_{self.r}-rainbow saturated: adding {self.failing_nonedge} "
                f"with color {self.failing_color} creates no rainbow C_{self.r}"
            )
        suffix = " (complete graph, no nonedges)" if self.vacuous else ""
        return f"C_{self.r}-rainbow saturated{suffix}"


class SufficiencyReport(BaseModel):
    """Outcome of the edge-disjoint rainbow path pair check."""

    holds: bool
    r: int
    witnesses: list[NonedgeEvidence] = Field(default_factory=list, description="The pair found for every nonedge")
    failing_nonedge: Edge | None = None


class NecessityReport(BaseModel):
    """Outcome of the path avoidance check.

    ``violation_edge`` is None when no P_r joins the ends of ``violation_nonedge`` at all.
    """

    holds: bool
    r: int
    violation_nonedge: Edge | None = None
    violation_edge: Edge | None = None


class RainbowIffReport(BaseModel):
    """Rainbow saturation decided from the graph alone."""

    holds: bool
    r: int
    cycle: CycleWitness | None = Field(None, description="A C_r of the graph, when one exists")
    necessity: NecessityReport | None = None

    @property
    def violation(self) -> tuple[Edge, Edge | None] | None:
        if self.necessity is None or self.necessity.holds or self.necessity.violation_nonedge is None:
            return None
        return self.necessity.violation_nonedge, self.necessity.violation_edge


class WitnessFailure(BaseModel):
    """Why a witness table entry was rejected.

    Attributes:
        path_index: 0-based position of the offending path, None for table-level failures
        step: Index into the path's vertex sequence, when the failure is local to a step
        reason: Human readable diagnosis
    """

    path_index: int | None = None
    step: int | None = None
    reason: str


class WitnessOutcome(BaseModel):
    nonedge: Edge
    mode: Literal["disjoint_rainbow_pair", "edge_cover"]
    passed: bool
    failure: WitnessFailure | None = None
    uncovered_edge: Edge | None = None


class LemmaReport(BaseModel):
    """Outcome of the complete-graph path lemma for one order ``t``."""

    t: int
    holds: bool
    checked_triples: int = Field(0, description="Number of (u, v, e) triples checked")
    checked_quadruples: int = Field(0, description="Number of (u, v, e, w) quadruples checked")
    counterexample: dict[str, int | list[int]] | None = None

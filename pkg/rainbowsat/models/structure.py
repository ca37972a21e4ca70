"""Result models for the structural audits."""

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class Degree2Classification(BaseModel):
    """Good roots, bad roots and suspension vertices of a graph.

    A degree-2 vertex ``u`` with ``N(u) = {v, w}`` is a bad root when ``v`` has
    degree 2 and ``N(v) = {u, w}``; ``u`` and ``v`` are then partners hanging as
    a triangle on ``w``. Every other degree-2 vertex is a good root. The
    suspension vertices are the vertices ``w`` such triangles hang on.
    """

    good_roots: tuple[int, ...] = ()
    bad_roots: tuple[int, ...] = ()
    suspensions: tuple[int, ...] = ()
    bad_root_pairs: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def validate_pairs(self) -> "Degree2Classification":
        if set(self.good_roots) & set(self.bad_roots):
            raise ValueError("a vertex cannot be both a good and a bad root")
        paired = sorted(v for pair in self.bad_root_pairs for v in pair)
        if paired != sorted(self.bad_roots):
            raise ValueError("bad root pairs must cover every bad root exactly once")
        return self

    def partner(self, u: int) -> int | None:
        for a, b in self.bad_root_pairs:
            if u == a:
                return b
            if u == b:
                return a
        return None


class SuspensionViolation(BaseModel):
    vertex: int
    clause: Literal["bad_root_count", "degree", "good_root_neighbor"]
    detail: str


class SuspensionAudit(BaseModel):
    """Suspension vertex audit.

    Attributes:
        passed: Whether every suspension vertex meets all three clauses
        enforced: False in report-only mode, where findings never fail a run
        violations: Every failed clause, tagged with its vertex
    """

    passed: bool
    enforced: bool = True
    suspensions: tuple[int, ...] = ()
    violations: list[SuspensionViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed or not self.enforced


class BoundCheck(BaseModel):
    name: str
    required: int = Field(..., description="Smallest edge count the bound allows")
    actual: int
    passed: bool


class XiMembership(BaseModel):
    """Parameters under which a graph is isomorphic to a Xi construction.

    ``labeling[v]`` is the vertex of the built construction that vertex ``v``
    of the tested graph maps to.
    """

    a: tuple[int, int, int, int]
    partition: tuple[int, int, int, int]
    labeling: tuple[int, ...]


class StructureFindings(BaseModel):
    """Everything the structure audits found about one graph."""

    classification: Degree2Classification
    suspension_audit: SuspensionAudit
    bounds: list[BoundCheck] = Field(default_factory=list)
    xi_membership: XiMembership | None = None

    @property
    def ok(self) -> bool:
        return self.suspension_audit.ok and all(check.passed for check in self.bounds)

"""Reproducible run reports for CLI commands."""

import hashlib
import logging
import time
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

from .models.report import SCHEMA_VERSION
from .settings import settings

logger = logging.getLogger(__name__)


def file_digest(path: Path) -> str:
    """Return the SHA-256 hex digest of a file."""
    return hashlib.sha256(path.read_bytes()).hexdigest()


class StepOutcome(BaseModel):
    """One step of a run, such as a saturation check or an audit.

    ``passed`` is None for informational steps that cannot fail.
    """

    name: str
    passed: bool | None = None
    result: dict[str, Any] = Field(default_factory=dict)


class RunReport(BaseModel):
    """Everything a command did, enough to re-run and compare it.

    Two runs of the same command on the same inputs produce the same report
    apart from ``wall_time``.
    """

    schema_version: int = SCHEMA_VERSION
    tool_version: str
    command: list[str]
    input_digests: dict[str, str] = Field(default_factory=dict)
    seed: int = Field(default_factory=lambda: settings.random_seed)
    steps: list[StepOutcome] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(step.passed is not False for step in self.steps)


class ReportBuilder:
    """Collects steps for a RunReport and times the run."""

    def __init__(self, command: list[str], inputs: dict[str, Path] | None = None):
        from . import __version__

        self._started = time.perf_counter()
        self.report = RunReport(
            tool_version=__version__,
            command=command,
            input_digests={name: file_digest(path) for name, path in (inputs or {}).items()},
        )

    def add(self, name: str, result: BaseModel | dict[str, Any], passed: bool | None = None) -> StepOutcome:
        payload = result.model_dump(mode="json", exclude_none=True) if isinstance(result, BaseModel) else result
        step = StepOutcome(name=name, passed=passed, result=payload)
        self.report.steps.append(step)
        logger.debug(f"Step {name}: {'info' if passed is None else 'pass' if passed else 'fail'}")
        return step

    def finish(self) -> RunReport:
        self.report.wall_time = round(time.perf_counter() - self._started, 6)
        return self.report

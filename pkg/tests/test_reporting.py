"""Tests for run reports."""

from rainbowsat import __version__
from rainbowsat.models.report import SaturationReport
from rainbowsat.reporting import ReportBuilder, RunReport, StepOutcome, file_digest
from rainbowsat.settings import settings


def test_file_digest(tmp_path):
    """Test the digest is the SHA-256 of the file contents."""
    path = tmp_path / "empty.g6"
    path.write_bytes(b"")
    assert file_digest(path) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


def test_builder_records_steps(tmp_path):
    """Test steps, digests, seed and version end up in the report."""
    graph = tmp_path / "g.g6"
    graph.write_bytes(b"Bw\n")
    builder = ReportBuilder(["verify", "--r=5"], {"graph": graph})
    builder.add("saturation", SaturationReport(verdict="saturated", r=5), passed=True)
    builder.add("note", {"count": 3})
    report = builder.finish()

    assert report.tool_version == __version__
    assert report.seed == settings.random_seed
    assert report.input_digests == {"graph": file_digest(graph)}
    assert [step.name for step in report.steps] == ["saturation", "note"]
    assert report.steps[0].result["verdict"] == "saturated"
    assert "rainbow_copy" not in report.steps[0].result
    assert report.steps[1].passed is None
    assert report.wall_time >= 0
    assert report.passed


def test_failed_step_fails_report():
    """Test a single failing step fails the whole report."""
    report = RunReport(
        tool_version="0",
        command=["lemma"],
        steps=[StepOutcome(name="a", passed=True), StepOutcome(name="b", passed=False), StepOutcome(name="c")],
    )
    assert not report.passed

"""Output formatting utilities for CLI commands."""

import json
from typing import Any, Literal

from rich.console import Console
from rich.table import Table

from .reporting import RunReport, StepOutcome

console = Console()


def format_output(report: RunReport, format_type: Literal["table", "json"] = "table") -> None:
    """Format and display a run report in the specified format.

    Args:
        report: The report to display
        format_type: Output format - "table" for human-readable or "json" for machine-readable
    """
    if format_type == "json":
        format_json(report)
    else:
        format_table(report)


def format_json(report: RunReport) -> None:
    """Format the report as JSON and print to stdout."""
    output = report.model_dump(mode="json", exclude_none=True)
    print(json.dumps(output, indent=2))


def _status(step: StepOutcome) -> str:
    if step.passed is None:
        return "[dim]info[/dim]"
    return "[green]pass[/green]" if step.passed else "[red]fail[/red]"


def _pair(value: Any) -> str:
    return "-".join(str(v) for v in value) if isinstance(value, (list, tuple)) else str(value)


def summarize_step(step: StepOutcome) -> str:
    """One line describing a step's result."""
    result = step.result
    name = step.name.split()[0]
    if name == "construct" and "edge_count" in result:
        spec = result["spec"]
        summary = f"{spec['family']} n={result['n']} e={result['edge_count']}"
        if not result.get("matches_closed_form", True):
            summary += f" [yellow](closed form predicts {result['closed_form_edges']})[/yellow]"
        return summary
    if name == "saturation":
        verdict = result["verdict"]
        if verdict == "unsaturated":
            return f"unsaturated: nonedge {_pair(result['failing_nonedge'])} with color {result['failing_color']}"
        if verdict == "contains_rainbow_copy":
            return f"contains rainbow C_{result['r']} {_pair(result['rainbow_copy']['vertices'])}"
        return f"C_{result['r']}-rainbow saturated" + (" (complete graph)" if result.get("vacuous") else "")
    if name == "structure":
        audit = result["suspension_audit"]
        failed = [check["name"] for check in result.get("bounds", []) if not check["passed"]]
        parts = [f"suspensions {audit.get('suspensions', [])}", f"{len(audit.get('violations', []))} violations"]
        parts.append(f"bounds failing: {', '.join(failed)}" if failed else "bounds hold")
        if "xi_membership" in result:
            parts.append(f"Xi member a={result['xi_membership']['a']}")
        return "; ".join(parts)
    if name == "witness":
        outcomes = result["outcomes"]
        return f"{sum(o['passed'] for o in outcomes)}/{len(outcomes)} entries pass"
    if name == "search":
        if result.get("value") is None:
            return f"undetermined above {result.get('searched_through')} edges"
        return f"value {result['value']}, {len(result['extremal'])} extremal classes"
    if name == "lemma":
        return f"{result.get('checked_triples', 0)} triples, {result.get('checked_quadruples', 0)} quadruples"
    return ", ".join(f"{key}={value}" for key, value in result.items() if not isinstance(value, (dict, list)))


def format_witness_outcomes(step: StepOutcome) -> None:
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("Nonedge")
    table.add_column("Mode")
    table.add_column("Result")
    for outcome in step.result["outcomes"]:
        failure = outcome.get("failure")
        detail = "[green]pass[/green]"
        if failure:
            where = f"path {failure['path_index']}" if failure.get("path_index") is not None else "table"
            if failure.get("step") is not None:
                where += f", step {failure['step']}"
            detail = f"[red]{where}: {failure['reason']}[/red]"
        table.add_row(_pair(outcome["nonedge"]), outcome["mode"], detail)
    console.print(table)


def format_certificates(step: StepOutcome) -> None:
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("graph6")
    table.add_column("Edges")
    table.add_column("Colors")
    for certificate in step.result.get("extremal", []):
        colors = certificate["coloring"]["colors"]
        table.add_row(certificate["graph6"], str(len(colors)), str(len(set(colors))))
    console.print(table)


def format_table(report: RunReport) -> None:
    """Format the report as human-readable tables."""
    console.print(f"[bold green]{' '.join(report.command)}[/bold green]\n")

    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("Step")
    table.add_column("Status")
    table.add_column("Result")
    for step in report.steps:
        table.add_row(step.name, _status(step), summarize_step(step))
    console.print(table)

    for step in report.steps:
        if step.name == "witness":
            format_witness_outcomes(step)
        elif step.name == "search" and step.result.get("extremal"):
            format_certificates(step)

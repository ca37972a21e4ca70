import logging
from functools import wraps
from pathlib import Path
from typing import Literal, Optional

import pydantic
import typer
from rich.console import Console
from rich.logging import RichHandler

from .cli_formatters import format_output
from .exceptions import BudgetExceededError, ParameterError, ParseError, RainbowSatError, RejectedInputError
from .families import build
from .graph import encode_graph6, format_coloring, read_colored_graph, read_graph
from .models.family import parse_family_spec
from .models.structure import StructureFindings
from .reporting import ReportBuilder, RunReport
from .search import SearchTask, compute_rsat
from .settings import settings
from .structure import audit_bounds, audit_suspensions, classify_degree_two, xi_membership
from .structure.membership import MAX_ORDER as XI_MAX_ORDER
from .verifier import complete_graph_path_lemma, is_rainbow_saturated
from .witness_files import bundled_witness_text, parse_witness_file, replay_witnesses

app = typer.Typer(help="Rainbow saturation of cycles: constructions, verification and exhaustive search.")

logger = logging.getLogger(__name__)

EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

SearchModeChoice = Literal["all", "rainbow"]
SEARCH_MODES = {"all": "all_colorings", "rainbow": "rainbow_only"}


def configure_logging(verbose: bool) -> None:
    """Send log records to stderr so stdout stays clean for --json."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def handle_errors(f):
    """Decorator mapping library errors onto the CLI exit codes."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except typer.Exit:
            raise
        except ParseError as e:
            typer.echo(f"Error: Could not parse input - {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT)
        except ParameterError as e:
            typer.echo(f"Error: Invalid parameters - {e} (constraint: {e.constraint})", err=True)
            raise typer.Exit(code=EXIT_INPUT)
        except RejectedInputError as e:
            typer.echo(f"Error: Input rejected - {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT)
        except pydantic.ValidationError as e:
            typer.echo(f"Error: Invalid parameters - {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT)
        except BudgetExceededError as e:
            typer.echo(f"Error: Budget exceeded - {e}", err=True)
            if e.required is not None:
                typer.echo(f"The computation would need a budget of {e.required}.", err=True)
            raise typer.Exit(code=EXIT_BUDGET)
        except RainbowSatError as e:
            typer.echo(f"Error: {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT)
        except Exception as e:
            typer.echo(f"Unexpected error: {e}", err=True)
            raise typer.Exit(code=EXIT_INPUT)

    return wrapper


def _command(name: str, **params) -> list[str]:
    echo = [name]
    for key, value in params.items():
        if value is None or value is False:
            continue
        flag = f"--{key.replace('_', '-')}"
        echo.append(flag if value is True else f"{flag}={value}")
    return echo


def _emit(report: RunReport, json_output: bool, exit_code: int = 0) -> None:
    output_format = "json" if json_output else settings.cli_output_format
    format_output(report, format_type=output_format)
    if exit_code:
        raise typer.Exit(code=exit_code)


def _int_tuple(raw: Optional[str]) -> Optional[tuple[int, ...]]:
    if raw is None:
        return None
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ParameterError(f"expected comma separated integers, got {raw!r}", "comma separated integers") from None


@app.command(help=f"Display the current installed version of {settings.project_name}.")
def version():
    from . import __version__

    typer.echo(f"{settings.project_name} - {__version__}")


@app.command(help="Build a family member and write its graph6 and coloring files.")
@handle_errors
def construct(
    family: str = typer.Option(..., "--family", help="Family name, e.g. m, w, omega, xi, s, gamma, gamma-r, t"),
    n: Optional[int] = typer.Option(None, "--n", help="Order of the graph"),
    r: Optional[int] = typer.Option(None, "--r", help="Cycle length for gamma-r, kstar, t and t-style"),
    partition: Optional[str] = typer.Option(None, "--partition", help="Four block sizes, e.g. 6,3,3,3"),
    a: Optional[str] = typer.Option(None, "--a", help="Triangle counts for xi, e.g. 1,0,0,0"),
    n1: Optional[int] = typer.Option(None, "--n1", help="First block order for gamma"),
    n2: Optional[int] = typer.Option(None, "--n2", help="Second block order for gamma"),
    q: Optional[int] = typer.Option(None, "--q", help="Number of blocks for friendship"),
    p: Optional[int] = typer.Option(None, "--p", help="Clique order for friendship"),
    shape: Optional[str] = typer.Option(None, "--shape", help="Friendship shape: plain, bar or tilde"),
    output_dir: Path = typer.Option(Path("."), "--output-dir", "-o", help="Directory for the written files"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Build a construction and write ``<family>-<n>.g6`` and ``<family>-<n>.col``."""
    configure_logging(verbose)
    values = {
        "n": n,
        "r": r,
        "partition": _int_tuple(partition),
        "a": _int_tuple(a),
        "n1": n1,
        "n2": n2,
        "q": q,
        "p": p,
        "shape": shape,
    }
    spec = parse_family_spec({"family": family, **{k: v for k, v in values.items() if v is not None}})
    construction = build(spec)

    output_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{spec.family}-{construction.n}"
    graph_file = output_dir / f"{stem}.g6"
    coloring_file = output_dir / f"{stem}.col"
    graph_file.write_bytes(encode_graph6(construction.graph) + b"\n")
    names = " ".join(f"{label}={v}" for label, v in sorted(construction.labels.items(), key=lambda item: item[1]))
    coloring_file.write_text(format_coloring(construction.colored.coloring, header=f"{construction}\n{names}"))

    builder = ReportBuilder(_command("construct", family=family, **values))
    builder.add(
        "construct",
        {
            "spec": spec.model_dump(mode="json", exclude_none=True),
            "n": construction.n,
            "edge_count": construction.edge_count,
            "closed_form_edges": construction.closed_form_edges,
            "matches_closed_form": construction.matches_closed_form,
            "color_classes": construction.colored.coloring.class_count,
            "designated": construction.designated,
            "graph_file": str(graph_file),
            "coloring_file": str(coloring_file),
        },
    )
    _emit(builder.finish(), json_output)


@app.command(help="Decide C_r-rainbow saturation of a colored graph and audit its structure.")
@handle_errors
def verify(
    graph_file: Path = typer.Argument(..., help="graph6 file"),
    r: int = typer.Option(..., "--r", help="Cycle length"),
    coloring: Optional[Path] = typer.Option(None, "--coloring", help="Coloring file with 'u v c' lines"),
    rainbow: bool = typer.Option(False, "--rainbow", help="Use the rainbow coloring"),
    jobs: int = typer.Option(settings.jobs, "--jobs", "-j", help="Worker processes (RSAT_JOBS)"),
    evidence: bool = typer.Option(True, "--evidence/--no-evidence", help="Embed the witness paths of every nonedge"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Run the saturation check, the suspension audit and the lower-bound audit."""
    configure_logging(verbose)
    if (coloring is None) == (not rainbow):
        raise RejectedInputError("give exactly one of --coloring FILE or --rainbow")

    inputs = {"graph": graph_file} | ({"coloring": coloring} if coloring else {})
    builder = ReportBuilder(_command("verify", graph=graph_file, r=r, coloring=coloring, rainbow=rainbow), inputs)
    colored = read_colored_graph(graph_file, coloring)
    g = colored.graph

    saturation = is_rainbow_saturated(colored, r, jobs=jobs, collect_evidence=evidence)
    builder.add("saturation", saturation, passed=saturation.is_saturated)

    # structural findings only bind graphs that are saturated
    classification = classify_degree_two(g)
    enforce = saturation.is_saturated and r >= 6
    findings = StructureFindings(
        classification=classification,
        suspension_audit=audit_suspensions(g, enforce=enforce, classification=classification),
        bounds=audit_bounds(g, r, rainbow_mode=colored.coloring.is_rainbow, classification=classification),
        xi_membership=xi_membership(g) if r == 5 and g.n <= XI_MAX_ORDER else None,
    )
    builder.add("structure", findings, passed=findings.ok if saturation.is_saturated else None)

    _emit(builder.finish(), json_output, 0 if saturation.is_saturated else EXIT_NEGATIVE)


@app.command(help="Replay a witness table against its graph.")
@handle_errors
def witness(
    witness_file: Optional[Path] = typer.Argument(None, help="Witness file"),
    graph_file: Optional[Path] = typer.Option(None, "--graph", help="graph6 file, defaults to the file's family"),
    coloring: Optional[Path] = typer.Option(None, "--coloring", help="Coloring checked by pair entries"),
    table: Optional[str] = typer.Option(None, "--table", help="Bundled table: table1, table2, table3 or table4"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Check every nonedge entry of a witness file."""
    configure_logging(verbose)
    if (witness_file is None) == (table is None):
        raise RejectedInputError("give exactly one of a witness file or --table")

    named = (("witness", witness_file), ("graph", graph_file), ("coloring", coloring))
    builder = ReportBuilder(
        _command("witness", file=witness_file, graph=graph_file, coloring=coloring, table=table),
        {name: path for name, path in named if path is not None},
    )
    text = witness_file.read_text() if witness_file is not None else bundled_witness_text(table or "")
    witnesses = parse_witness_file(text)

    if graph_file is not None:
        colored = read_colored_graph(graph_file, coloring) if coloring else None
        g = colored.graph if colored else read_graph(graph_file)
        used_coloring = colored.coloring if colored else None
    elif witnesses.family is not None:
        construction = build(witnesses.family)
        g = construction.graph
        used_coloring = construction.colored.coloring
        builder.add("construct", {"family": witnesses.family.model_dump(mode="json", exclude_none=True)})
    else:
        raise RejectedInputError("the witness file names no family, pass --graph")

    outcomes = replay_witnesses(g, witnesses, coloring=used_coloring)
    passed = all(outcome.passed for outcome in outcomes)
    builder.add("witness", {"outcomes": [o.model_dump(mode="json", exclude_none=True) for o in outcomes]}, passed)
    _emit(builder.finish(), json_output, 0 if passed else EXIT_NEGATIVE)


@app.command(help="Compute rsat(n, C_r) by exhaustive search.")
@handle_errors
def search(
    n: int = typer.Option(..., "--n", help="Order of the graphs"),
    r: int = typer.Option(..., "--r", help="Cycle length"),
    mode: SearchModeChoice = typer.Option("all", "--mode", help="all colorings or rainbow colorings only"),
    min_m: Optional[int] = typer.Option(None, "--min-m", help="First edge count to try"),
    max_m: Optional[int] = typer.Option(None, "--max-m", help="Last edge count to try"),
    jobs: int = typer.Option(settings.jobs, "--jobs", "-j", help="Worker processes (RSAT_JOBS)"),
    resume: Optional[Path] = typer.Option(None, "--resume", help="Checkpoint file to resume from and update"),
    output_dir: Optional[Path] = typer.Option(None, "--output-dir", "-o", help="Write certificate files here"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Search edge counts upward from n for the first C_r-rainbow saturated graph."""
    configure_logging(verbose)
    task = SearchTask(n=n, r=r, mode=SEARCH_MODES[mode], min_edges=min_m, max_edges=max_m, jobs=jobs, resume=resume)
    builder = ReportBuilder(_command("search", n=n, r=r, mode=mode, min_m=min_m, max_m=max_m))
    result = compute_rsat(task)

    if output_dir is not None:
        output_dir.mkdir(parents=True, exist_ok=True)
        for index, certificate in enumerate(result.extremal, start=1):
            stem = output_dir / f"rsat-n{n}-r{r}-{mode}-{index}"
            stem.with_suffix(".g6").write_text(certificate.graph6 + "\n")
            stem.with_suffix(".col").write_text(format_coloring(certificate.coloring, header=str(result)))

    builder.add("search", result, passed=result.determined)
    _emit(builder.finish(), json_output, 0 if result.determined else EXIT_BUDGET)


@app.command(help="Check the edge-avoiding path lemma in complete graphs by brute force.")
@handle_errors
def lemma(
    t: list[int] = typer.Option([5, 6, 7, 8], "--t", help="Orders of K_t to check, repeatable"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Run the complete-graph path lemma for every requested order."""
    configure_logging(verbose)
    builder = ReportBuilder(_command("lemma", t=",".join(str(order) for order in t)))
    holds = True
    for order in t:
        report = complete_graph_path_lemma(order)
        holds = holds and report.holds
        builder.add(f"lemma t={order}", report, passed=report.holds)
    _emit(builder.finish(), json_output, 0 if holds else EXIT_NEGATIVE)


if __name__ == "__main__":
    app()

"""Command-line interface for eigenid."""

import re
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence, Tuple

import numpy as np
import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .config import settings
from .core import HermitianMatrix, eigendecompose
from .exceptions import (
    DataFileError,
    DimensionError,
    EigenIdError,
    InfeasibleTargetsError,
    ShapeError,
)
from .experiment_engine import experiment_engine
from .golub import recover as recover_constraint_record
from .golub import stationary_values
from .log import setup_logging
from .models import (
    DeflationMode,
    ExperimentName,
    FailureReason,
    MatrixFormat,
    RecoveryReport,
    ReportFile,
)
from .oracle import random_hermitian
from .reports import JSONReporter, load_matrix, save_matrix

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DEGENERATE = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4

# CLI app
cli_app = typer.Typer(
    name="eigenid",
    help="Eigenvector magnitudes from eigenvalues, and constraint recovery for "
    "prescribed stationary values",
    no_args_is_help=True,
)

# Console for rich output
console = Console()


@cli_app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Enable debug logging"),
) -> None:
    """Eigenvector magnitudes from eigenvalues."""
    setup_logging("DEBUG" if verbose else settings.log_level)


@cli_app.command()
def generate(
    n: int = typer.Argument(..., min=1, help="Matrix dimension"),
    out_path: Path = typer.Option(..., "--out", "-o", help="Output file"),
    seed: int = typer.Option(0, "--seed", "-s", help="Generator seed"),
    complex_flag: bool = typer.Option(
        True, "--complex/--real", help="Complex Hermitian or real symmetric"
    ),
    fmt: Optional[MatrixFormat] = typer.Option(
        None, "--format", "-f", help="json or mm (default: from the file suffix)"
    ),
) -> None:
    """Generate a seeded random Hermitian matrix (A + A* of uniform entries)."""
    matrix = random_hermitian(n, seed, complex_flag)
    try:
        path = save_matrix(matrix, out_path, fmt)
    except DataFileError as exc:
        _fail(str(exc), exc.exit_code)
    kind = "complex Hermitian" if complex_flag else "real symmetric"
    console.print(f"[green]✓ Wrote {n}x{n} {kind} matrix (seed {seed}) to {path}[/green]")


@cli_app.command()
def verify(
    matrix_path: Optional[Path] = typer.Argument(None, help="Matrix file to verify"),
    random_args: Optional[Tuple[int, int]] = typer.Option(
        None, "--random", help="Generate the matrix instead: N SEED"
    ),
    complex_flag: bool = typer.Option(
        True, "--complex/--real", help="Kind of generated matrix (with --random)"
    ),
    experiments: Optional[List[ExperimentName]] = typer.Option(
        None, "--experiment", "-e", help="Experiment to run (repeatable, default all)"
    ),
    eps: Optional[float] = typer.Option(None, "--eps", help="Pass tolerance"),
    mode: DeflationMode = typer.Option(
        DeflationMode.RESTRICTION, "--mode", "-m", help="Deflation of the projector zero"
    ),
    seed: Optional[int] = typer.Option(
        None, "--seed", "-s", help="Seed of the arbitrary orthonormal basis"
    ),
    fmt: Optional[MatrixFormat] = typer.Option(None, "--format", "-f", help="json or mm"),
    symmetrize: bool = typer.Option(False, "--symmetrize", help="Replace A by (A + A*)/2"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Check identity-derived magnitudes against a direct eigendecomposition."""
    if random_args is not None and None in random_args:
        random_args = None
    if (matrix_path is None) == (random_args is None):
        _fail("give exactly one of MATRIX_PATH or --random N SEED", EXIT_IO)
    if eps is not None and not eps > 0:
        _fail(f"--eps must be positive, got {eps}", EXIT_IO)

    try:
        if random_args is not None:
            n, matrix_seed = random_args
            matrix: HermitianMatrix = random_hermitian(n, matrix_seed, complex_flag)
        else:
            matrix_seed = None
            matrix = load_matrix(matrix_path, fmt, symmetrize)

        report_file = experiment_engine.run(
            matrix,
            experiments or [ExperimentName.ALL],
            eps=eps,
            mode=mode,
            seed=matrix_seed,
            basis_seed=seed,
        )
        _display_reports(report_file)
        if json_out is not None:
            JSONReporter().write(report_file, json_out)
            console.print(f"[blue]Report written to {json_out}[/blue]")
    except EigenIdError as exc:
        _fail(str(exc), exc.exit_code)

    raise typer.Exit(_verify_exit_code(report_file))


@cli_app.command()
def recover(
    matrix_path: Path = typer.Argument(..., help="Matrix file"),
    targets: str = typer.Argument(
        ..., help="Target stationary values: comma-separated, or @FILE"
    ),
    signs: Optional[str] = typer.Option(
        None, "--signs", help="Sign pattern such as '+-+' (default all +)"
    ),
    fmt: Optional[MatrixFormat] = typer.Option(None, "--format", "-f", help="json or mm"),
    symmetrize: bool = typer.Option(False, "--symmetrize", help="Replace A by (A + A*)/2"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the result here"),
) -> None:
    """Recover the unit constraint vector that produces the target stationary values."""
    try:
        matrix = load_matrix(matrix_path, fmt, symmetrize)
        if matrix.n < 2:
            raise DimensionError(f"recovery needs n >= 2, got a {matrix.n}x{matrix.n} matrix")
        x = _parse_targets(targets)
        pattern = _parse_signs(signs, matrix.n)
        recovery = recover_constraint_record(eigendecompose(matrix), x, pattern)
        achieved = stationary_values(matrix, recovery.constraint)
    except InfeasibleTargetsError as exc:
        _fail(f"infeasible targets at index {exc.index}: {exc}", EXIT_INFEASIBLE)
    except (ShapeError, DimensionError) as exc:
        _fail(str(exc), EXIT_IO)
    except EigenIdError as exc:
        _fail(str(exc), exc.exit_code)

    report = RecoveryReport(
        n=matrix.n,
        targets=recovery.targets.tolist(),
        weights=recovery.weights.tolist(),
        signs=_entries(recovery.signs),
        constraint=_entries(recovery.constraint.entries),
        residual=float(np.abs(achieved - recovery.targets).max()),
        tolerance=settings.recovery_tol,
    )
    _display_recovery(report)

    if json_out is not None:
        try:
            JSONReporter().write(report, json_out)
        except DataFileError as exc:
            _fail(str(exc), exc.exit_code)
    raise typer.Exit(EXIT_OK if report.passed else EXIT_MISMATCH)


@cli_app.command()
def version() -> None:
    """Show version information."""
    console.print(Panel.fit(
        "[bold blue]eigenid[/bold blue]\n"
        f"Version: {__version__}\n"
        f"Python: {sys.version.split()[0]}\n"
        f"NumPy: {np.__version__}",
        title="Version Information",
    ))


def _fail(message: str, code: int) -> NoReturn:
    console.print(f"[red]Error: {message}[/red]")
    raise typer.Exit(code)


def _verify_exit_code(report_file: ReportFile) -> int:
    """Pass, else degenerate if any report is, else mismatch."""
    if report_file.all_passed:
        return EXIT_OK
    if report_file.any_degenerate:
        return EXIT_DEGENERATE
    return EXIT_MISMATCH


def _parse_targets(text: str) -> List[float]:
    """Comma/whitespace separated reals, or the contents of @FILE."""
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DataFileError(f"cannot read targets: {exc.strerror or exc}", path=str(path)) from exc
    tokens = [token for token in re.split(r"[,\s]+", text.strip()) if token]
    try:
        return [float(token) for token in tokens]
    except ValueError as exc:
        raise DataFileError(f"cannot parse targets: {exc}") from exc


def _parse_signs(pattern: Optional[str], n: int) -> Optional[List[float]]:
    """'+-+' style pattern to +1/-1 values."""
    if pattern is None:
        return None
    if len(pattern) != n or set(pattern) - {"+", "-"}:
        raise DataFileError(f"sign pattern must be {n} characters of '+' or '-'")
    return [1.0 if ch == "+" else -1.0 for ch in pattern]


def _entries(vector: np.ndarray) -> list:
    """JSON-friendly entries: floats, or [re, im] pairs for complex vectors."""
    if np.iscomplexobj(vector):
        return [(float(z.real), float(z.imag)) for z in vector]
    return [float(x) for x in vector]


def _format_values(values: Sequence) -> str:
    parts = []
    for value in values:
        if isinstance(value, tuple):
            parts.append(f"{value[0]:+.6g}{value[1]:+.6g}j")
        else:
            parts.append(f"{value:+.6g}")
    return "[" + ", ".join(parts) + "]"


def _display_reports(report_file: ReportFile) -> None:
    """Display experiment results in a formatted table."""
    table = Table(title="Verification Experiments")
    table.add_column("Experiment", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("Seed", justify="right")
    table.add_column("Mode", style="magenta")
    table.add_column("Max error", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Result")
    table.add_column("Time", justify="right", style="yellow")

    for report in report_file.reports:
        if report.passed:
            result = "[green]PASS[/green]"
        elif report.reason is FailureReason.DEGENERATE:
            result = "[yellow]DEGENERATE[/yellow]"
        else:
            result = "[red]FAIL[/red]"
        error = "-" if report.max_abs_error is None else f"{report.max_abs_error:.3e}"
        table.add_row(
            report.experiment.value,
            str(report.n),
            "-" if report.seed is None else str(report.seed),
            report.mode.value,
            error,
            f"{report.tolerance:.1e}",
            result,
            f"{report.wall_time:.2f}s",
        )
    console.print(table)

    for report in report_file.reports:
        if report.detail:
            console.print(f"[dim]{report.experiment.value}: {report.detail}[/dim]")

    color = "green" if report_file.all_passed else "red"
    console.print(f"[{color}]all_passed = {str(report_file.all_passed).lower()}[/{color}]")


def _display_recovery(report: RecoveryReport) -> None:
    """Display a recovered constraint."""
    color = "green" if report.passed else "red"
    console.print(Panel.fit(
        f"[bold]Targets:[/bold] {_format_values(report.targets)}\n"
        f"[bold]Weights d^2:[/bold] {_format_values(report.weights)}\n"
        f"[bold]Constraint c:[/bold] {_format_values(report.constraint)}\n"
        f"[bold]Residual:[/bold] [{color}]{report.residual:.3e}[/{color}] "
        f"(tolerance {report.tolerance:.1e})",
        title="Constraint Recovery",
    ))


def main() -> None:
    """Main entry point for CLI."""
    cli_app()


if __name__ == "__main__":
    main()

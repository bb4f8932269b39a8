"""Command-line interface for skewmarkov."""

import logging
import sys
from typing import List, Optional

import click
import numpy as np
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table

from . import __version__
from .analysis.analyzer import ChainAnalyzer, exit_code
from .config import config
from .decomposition.frame import to_u
from .decomposition.split import u_frame
from .dynamics.flow import flow
from .errors import DimensionMismatchError, SkewMarkovError
from .formats.generator_parser import GeneratorParser
from .formats.generator_writer import GeneratorWriter
from .formats.report_writer import ReportWriter
from .formats.trajectory_writer import TrajectoryWriter
from .markov.generator import ChainKind, random_chain, validate_generator
from .markov.stationary import stationary_distribution
from .models.generator import ProbabilityVector
from .models.trajectory import FlowGenerator, Scheme
from .validation.verification_suite import Fault, SuiteStats, VerificationSuite

# stdout carries reports and CSV; everything human-facing goes to stderr
console = Console(stderr=True)

logger = logging.getLogger(__name__)

convention_option = click.option(
    "--convention",
    type=click.Choice(["column", "row"]),
    default=None,
    help="Orientation of the input matrix (overrides the file's own field)",
)
out_option = click.option(
    "--out", "-o",
    "output_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write to this path instead of stdout",
)
verbose_option = click.option("--verbose", "-v", is_flag=True, help="Debug logging")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _check_config() -> None:
    errors = config.validate()
    if errors:
        console.print("[red]Configuration errors:[/red]")
        for error in errors:
            console.print(f"  - {error}")
        raise click.Abort()


def _print_error(error: SkewMarkovError) -> None:
    console.print(f"[red]{type(error).__name__}[/red] ({error.module}): {error}")


def _echo(text: str) -> None:
    click.echo(text, nl=not text.endswith("\n"))


def _wrote(output_path: str) -> None:
    console.print(f"[blue]Wrote:[/blue] {output_path}")


def _parse_vector(text: str, name: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError:
        raise click.BadParameter(f"expected comma-separated floats, got {text!r}", param_hint=name)


@click.group()
@click.version_option(version=__version__)
def cli():
    """Gradient/Hamiltonian decomposition of Markov generators."""
    pass


@cli.command()
@click.option(
    "--input", "-i",
    "input_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="Generator file (.json or .csv)",
)
@convention_option
@out_option
@click.option("--seed", type=int, default=0, help="Seed of the diagnostic test vector")
@click.option("--verbose", "-v", is_flag=True, help="Include matrices and per-edge detail")
def analyze(
    input_path: str,
    convention: Optional[str],
    output_path: Optional[str],
    seed: int,
    verbose: bool,
):
    """Run the full analysis and emit a JSON report.

    Exit code 0 when every invariant holds, 2 on an invariant violation,
    1 on an input error.
    """
    _configure_logging(verbose)
    _check_config()

    analyzer = ChainAnalyzer(verbose=verbose, seed=seed)
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("Analyzing", total=None)

        def update_progress(stage: str):
            progress.update(task, description=f"[cyan]{stage}[/cyan]")

        report = analyzer.analyze_file(
            input_path, convention=convention, progress_callback=update_progress
        )

    writer = ReportWriter()
    if output_path:
        writer.write(report, output_path)
        _wrote(output_path)
    else:
        _echo(writer.to_string(report))

    if report.error is not None:
        console.print(
            f"[red]{report.error.type}[/red] ({report.error.module}): {report.error.message}"
        )
    for violation in report.violations:
        console.print(
            f"[yellow]violation[/yellow] {violation.check}: "
            f"{violation.value:.3e} > {violation.tolerance:.3e} ({violation.module})"
        )
    sys.exit(exit_code(report))


@cli.command()
@click.option(
    "--input", "-i",
    "input_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="Generator file (.json or .csv)",
)
@click.option("--p0", default=None, help="Initial distribution, comma-separated")
@click.option("--u0", default=None, help="Raw initial amplitudes (u-frame skew flows only)")
@click.option("--t", "t_end", required=True, type=float, help="Final time")
@click.option("--h", "step", type=float, default=None, help="Sample spacing / step size")
@click.option("--frame", type=click.Choice(["u", "p"]), default="u", help="Exported frame")
@click.option(
    "--generator",
    type=click.Choice([g.value for g in FlowGenerator]),
    default=FlowGenerator.SA.value,
    help="Part of the generator driving the flow",
)
@click.option(
    "--scheme",
    type=click.Choice([s.value for s in Scheme]),
    default=Scheme.EXPM.value,
    help="Exact propagator or fixed-step RK4",
)
@click.option("--stride", type=click.IntRange(min=1), default=1, help="Keep every k-th row")
@convention_option
@out_option
@verbose_option
def simulate(
    input_path: str,
    p0: Optional[str],
    u0: Optional[str],
    t_end: float,
    step: Optional[float],
    frame: str,
    generator: str,
    scheme: str,
    stride: int,
    convention: Optional[str],
    output_path: Optional[str],
    verbose: bool,
):
    """Integrate du/dt = G u and export the trajectory as CSV."""
    _configure_logging(verbose)
    _check_config()

    if (p0 is None) == (u0 is None):
        raise click.UsageError("Give exactly one of --p0 and --u0")
    if u0 is not None and (frame != "u" or generator != FlowGenerator.A.value):
        raise click.UsageError("--u0 is only accepted with --frame u --generator A")

    try:
        source = GeneratorParser().parse(input_path, convention=convention)
        Q = validate_generator(source.raw, source.convention, source.labels)
        Q.require_irreducible()
        decomposition = u_frame(Q, stationary_distribution(Q))

        if p0 is not None:
            values = _parse_vector(p0, "--p0")
            if values.size != Q.n:
                raise DimensionMismatchError(Q.n, values.size, "p0")
            initial = to_u(ProbabilityVector.from_values(values), decomposition.frame)
        else:
            initial = _parse_vector(u0, "--u0")

        traj = flow(decomposition, generator, initial, t_end, h=step, scheme=scheme)
        writer = TrajectoryWriter()
        options = dict(frame=frame, transform=decomposition.frame, stride=stride)
        if output_path:
            writer.write(traj, output_path, **options)
        else:
            _echo(writer.to_string(traj, **options))
    except SkewMarkovError as e:
        _print_error(e)
        sys.exit(1)

    if output_path:
        _wrote(output_path)
    logger.debug("Simulated %d samples with %s/%s", len(traj), generator, scheme)


@cli.command()
@click.option("--n", "n", required=True, type=int, help="Number of states")
@click.option(
    "--kind",
    type=click.Choice([k.value for k in ChainKind]),
    default=ChainKind.GENERAL.value,
    help="Chain family",
)
@click.option("--seed", type=int, default=0, help="Random seed")
@click.option("--a", "a", type=float, default=2.0, help="Forward ring rate (cycle)")
@click.option("--b", "b", type=float, default=1.0, help="Backward ring rate (cycle)")
@click.option("--rate-scale", type=float, default=1.0, help="Multiply every rate")
@out_option
@verbose_option
def gen(
    n: int,
    kind: str,
    seed: int,
    a: float,
    b: float,
    rate_scale: float,
    output_path: Optional[str],
    verbose: bool,
):
    """Generate a seeded test chain in the JSON generator format."""
    _configure_logging(verbose)
    _check_config()

    try:
        Q = random_chain(n, seed, kind=kind, rate_scale=rate_scale, a=a, b=b)
    except SkewMarkovError as e:
        _print_error(e)
        sys.exit(1)

    writer = GeneratorWriter()
    if output_path:
        writer.write(Q, output_path)
        _wrote(output_path)
    else:
        _echo(writer.to_string(Q))


@cli.command()
@click.option("--trials", type=click.IntRange(min=1), default=200, help="Number of random chains")
@click.option("--nmax", type=click.IntRange(min=2), default=12, help="Largest chain size")
@click.option("--seed", type=int, default=1, help="Base seed")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads")
@click.option(
    "--inject-fault",
    type=click.Choice([f.value for f in Fault]),
    default=None,
    hidden=True,
)
@verbose_option
def verify(
    trials: int,
    nmax: int,
    seed: int,
    workers: Optional[int],
    inject_fault: Optional[str],
    verbose: bool,
):
    """Run every invariant suite over seeded random chains.

    Exits 0 only if every suite passes on every trial.
    """
    _configure_logging(verbose)
    _check_config()

    suite = VerificationSuite(
        trials=trials, nmax=nmax, seed=seed, workers=workers, fault=inject_fault
    )
    if inject_fault:
        console.print(f"[yellow]Injected fault:[/yellow] {inject_fault}")

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
    ) as progress:
        task = progress.add_task("Verifying", total=trials)

        def update_progress(completed: int, total: int):
            progress.update(task, completed=completed)

        stats = suite.run(progress_callback=update_progress)

    _print_verify_table(stats)
    _print_verify_summary(stats)
    sys.exit(0 if stats.all_passed else 2)


def _print_verify_table(stats: SuiteStats):
    """Print per-suite pass counts and worst residuals."""
    table = Table(title="Verification")
    table.add_column("Suite", style="cyan")
    table.add_column("Passed", justify="right")
    table.add_column("Checks", justify="right")
    table.add_column("Worst check")
    table.add_column("Value", justify="right")
    table.add_column("Tolerance", justify="right")

    for result in stats.suites.values():
        if result.trials == 0:
            table.add_row(result.name, "[dim]skipped[/dim]", "0", "", "", "")
            continue
        color = "green" if result.ok else "red"
        table.add_row(
            result.name,
            f"[{color}]{result.passed}/{result.trials}[/{color}]",
            str(result.checks),
            result.worst_check or "",
            f"{result.worst_value:.3e}",
            f"{result.worst_tolerance:.3e}",
        )

    console.print(table)


def _print_verify_summary(stats: SuiteStats):
    """Print the overall verdict and the first failures of each failing suite."""
    failing = [r for r in stats.suites.values() if not r.ok]
    lines: List[str] = [
        f"[bold]Trials:[/bold] {stats.completed}/{stats.total}",
        f"[bold]Failed trials:[/bold] {stats.failed_trials}",
        f"[dim]Elapsed:[/dim] {stats.elapsed:.2f}s",
    ]
    for result in failing:
        lines.append(f"\n[red]{result.name}[/red]")
        lines.extend(f"  {failure}" for failure in result.failures)

    title = "[green]All suites passed[/green]" if stats.all_passed else "[red]Failures[/red]"
    console.print(Panel("\n".join(lines), title=title))


if __name__ == "__main__":
    cli()

import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from permtab.blocks.decomposition import decompose
from permtab.config import get_settings
from permtab.core.permutation import parse_permutation
from permtab.core.statistics import stat_report
from permtab.errors import DomainError, PermtabError
from permtab.harness.catalogue import Domain, statistic_names
from permtab.harness.distribution import joint_distribution
from permtab.harness.domains import format_element
from permtab.harness.registry import cli_names, get_map
from permtab.harness.report import SuiteReport
from permtab.harness.suites import SuiteContext, run_suite, suite_names
from permtab.invseq.code_b import slices
from permtab.invseq.maps import alpha_trace
from permtab.invseq.sequences import parse_inversion_sequence
from permtab.tableaux.enumeration import enumerate_pt
from permtab.tableaux.maps import border_labels, gamma_cn, phi_zigzag, tableau_stats, to_alternative
from permtab.tableaux.text import format_alternative, format_tableau, read_tableau

logger = logging.getLogger(__name__)

logging.basicConfig(level=get_settings().log_level)

app = typer.Typer(help="permtab - permutation, tableau and inversion sequence statistics")
tableau_app = typer.Typer(help="Permutation tableaux: enumerate, convert, map to permutations")
app.add_typer(tableau_app, name="tableau")

console = Console()
err_console = Console(stderr=True)


def _fail_input(exc: PermtabError):
    err_console.print(f"[bold red]Error:[/bold red] {escape(str(exc))}")
    raise typer.Exit(2)


def _split(values: Optional[List[str]]) -> list[str]:
    names: list[str] = []
    for value in values or []:
        names += [part.strip() for part in value.split(",") if part.strip()]
    return names


@app.command()
def stat(
    permutation: str = typer.Argument(..., help='Permutation, e.g. "5 9 3 7 2 1 6 8 4" or 59372'),
    all_stats: bool = typer.Option(False, "--all", "-a", help="Print every statistic and its value set"),
    names: Optional[List[str]] = typer.Option(None, "--name", "-n", help="Statistic to print (repeatable or comma-separated)"),
    blocks: bool = typer.Option(False, "--blocks", "-b", help="Print the block decomposition"),
):
    """
    Print statistics of a permutation.
    """
    try:
        p = parse_permutation(permutation)
        report = stat_report(p)
        counts = report.as_counts()
        wanted = _split(names) or list(counts)
        unknown = [name for name in wanted if name not in counts]
        if unknown:
            raise PermtabError(f"unknown statistic {unknown[0]!r}; choose from {', '.join(counts)}")
    except PermtabError as exc:
        _fail_input(exc)

    for name in wanted:
        typer.echo(f"{name}={counts[name]}")

    if all_stats:
        sets = {
            "WNM": report.wnm_set,
            "RLM": report.rlm_set,
            "LRMAX": report.lrmax_set,
            "RLMAX": report.rlmax_set,
            "LRMIN": report.lrmin_set,
            "RLMIN": report.rlmin_set,
            "DES": report.des_set,
            "ASC": report.asc_set,
        }
        for label, values in sets.items():
            typer.echo(f"{label}={{{','.join(str(v) for v in sorted(values))}}}")

    if blocks:
        typer.echo(decompose(p).pretty())


@app.command("map")
def apply_map(
    name: str = typer.Argument(..., help=f"Map to apply: {', '.join(cli_names())}"),
    value: str = typer.Argument(..., help="Permutation, inversion sequence, or tableau file for Phi/Gamma"),
    trace: bool = typer.Option(False, "--trace", "-t", help="Show intermediate steps (b and alpha)"),
):
    """
    Apply a registered map to one input.
    """
    try:
        spec = get_map(name)
        if spec.source is Domain.S:
            obj = parse_permutation(value)
        elif spec.source is Domain.I:
            obj = parse_inversion_sequence(value)
        else:
            obj = read_tableau(Path(value))

        if spec.name == "phi_swap" and obj.n == 1:
            logger.warning("phi_swap is undefined for n = 1; returning the input")
            typer.echo(format_element(Domain.S, obj))
            return
        if not spec.admits(obj):
            raise DomainError(f"{spec.alias} needs {spec.requirement}")

        if trace and spec.name == "code_b":
            for i, u in enumerate(slices(obj)):
                typer.echo(f"U{i}: {u}")
        if trace and spec.name == "alpha":
            for step, stage in alpha_trace(obj)[1:]:
                typer.echo(f"{step}: {stage}")

        result = spec.fn(obj)
    except PermtabError as exc:
        _fail_input(exc)
    except OSError as exc:
        err_console.print(f"[bold red]Error:[/bold red] cannot read {escape(value)}: {escape(str(exc))}")
        raise typer.Exit(2)

    typer.echo(format_element(spec.target, result))


@tableau_app.command("enum")
def tableau_enum(
    n: int = typer.Argument(..., help="Tableau length"),
    count: bool = typer.Option(False, "--count", "-c", help="Only print how many tableaux there are"),
):
    """
    List every permutation tableau of length n, separated by "--" lines.
    """
    try:
        tableaux = list(enumerate_pt(n))
    except PermtabError as exc:
        _fail_input(exc)

    if count:
        typer.echo(str(len(tableaux)))
        return
    for t in tableaux:
        typer.echo(format_tableau(t), nl=False)
        typer.echo("--")


@tableau_app.command("alt")
def tableau_alt(
    path: Path = typer.Argument(..., help="Tableau file"),
):
    """
    Print the arrow form (U, L, .) of a tableau.
    """
    try:
        t = read_tableau(path)
    except PermtabError as exc:
        _fail_input(exc)
    except OSError as exc:
        err_console.print(f"[bold red]Error:[/bold red] {escape(str(exc))}")
        raise typer.Exit(2)
    typer.echo(format_alternative(to_alternative(t)), nl=False)


@tableau_app.command("to-perm")
def tableau_to_perm(
    path: Path = typer.Argument(..., help="Tableau file"),
    via: str = typer.Option("phi", "--via", help="phi, gamma or stats"),
):
    """
    Map a tableau to a permutation with Phi or Gamma, or print its statistics.
    """
    try:
        t = read_tableau(path)
        if via not in ("phi", "gamma", "stats"):
            raise PermtabError(f"--via must be phi, gamma or stats, got {via!r}")
    except PermtabError as exc:
        _fail_input(exc)
    except OSError as exc:
        err_console.print(f"[bold red]Error:[/bold red] {escape(str(exc))}")
        raise typer.Exit(2)

    if via == "phi":
        typer.echo(format_element(Domain.S, phi_zigzag(t)))
    elif via == "gamma":
        typer.echo(format_element(Domain.S, gamma_cn(t)))
    else:
        stats = tableau_stats(t)
        row_labels, col_labels = border_labels(t)
        typer.echo(f"urr={stats.urr}")
        typer.echo(f"topone={stats.topone}")
        typer.echo(f"row labels={','.join(str(v) for v in row_labels)}")
        typer.echo(f"column labels={','.join(str(v) for v in col_labels)}")


@app.command()
def dist(
    n: int = typer.Argument(..., help="Size of the domain"),
    domain: str = typer.Option("S", "--domain", "-d", help="S, I or PT"),
    stats: Optional[List[str]] = typer.Option(None, "--stats", "-s", help="Comma-separated statistics, e.g. wnm-1,rlm"),
    out: str = typer.Option("json", "--out", "-o", help="json or csv"),
    file: Optional[Path] = typer.Option(None, "--file", "-f", help="Write to this file instead of stdout"),
    avoid: Optional[str] = typer.Option(None, "--avoid", help="Restrict S to avoiders of a pattern (321)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
):
    """
    Export the joint distribution of statistics over S_n, I_n or PT(n).
    """
    try:
        try:
            chosen = Domain(domain)
        except ValueError:
            raise PermtabError(f"unknown domain {domain!r}; choose from S, I, PT")
        names = _split(stats)
        if not names:
            raise PermtabError(f"--stats is required; available on {domain}: {', '.join(statistic_names(chosen))}")
        if out not in ("json", "csv"):
            raise PermtabError(f"--out must be json or csv, got {out!r}")
        with err_console.status(f"[bold green]Enumerating {chosen.value}_{n}...", spinner="dots"):
            table = joint_distribution(
                n, chosen, names, avoid=avoid, workers=workers or get_settings().workers
            )
    except PermtabError as exc:
        _fail_input(exc)

    text = table.to_json() + "\n" if out == "json" else table.to_csv()
    if file is not None:
        file.parent.mkdir(parents=True, exist_ok=True)
        file.write_text(text)
        err_console.print(f"[bold green]✓[/bold green] Wrote {len(table.counts)} rows to {file}")
    else:
        typer.echo(text, nl=False)


@app.command()
def verify(
    suite: str = typer.Argument(..., help=f"Suite to run: {', '.join(suite_names())}"),
    max_n: int = typer.Option(7, "--max-n", "-k", help="Largest n to check (clamped per domain)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    extended: bool = typer.Option(False, "--extended", help="Allow n = 9 on S_n"),
    db_path: Optional[str] = typer.Option(None, "--db", help="Archive the report in this SQLite file"),
    archive: bool = typer.Option(False, "--archive", help="Archive the report at PERMTAB_DB_PATH"),
):
    """
    Run a verification suite for every n from 1 to --max-n.

    Exit code 0 when every check passes, 1 when any check fails.
    """
    try:
        ctx = SuiteContext.build(max_n, workers=workers, extended=extended)
        with err_console.status(f"[bold green]Running {suite}...", spinner="dots"):
            report = run_suite(suite, ctx)
    except PermtabError as exc:
        _fail_input(exc)

    if as_json:
        typer.echo(report.to_json())
    else:
        _print_report(report)

    if db_path or archive:
        from permtab.database.db import ReportArchive

        db = ReportArchive(db_path or get_settings().db_path)
        outcome = db.record_run(report, workers=ctx.workers)
        db.close()
        if outcome.matches_previous is False:
            err_console.print(f"[yellow]Report differs from the previous {suite} run at n={max_n}[/yellow]")
        err_console.print(f"[dim]Archived run {outcome.run_id} ({outcome.digest})[/dim]")

    if not report.passed:
        raise typer.Exit(1)


def _print_report(report: SuiteReport):
    table = Table(show_header=True, title=f"{report.suite} (n <= {report.n})")
    table.add_column("Check", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("Status", justify="center")
    table.add_column("Witness / detail")

    for check in report.checks:
        status = "[green]PASS[/green]" if check.passed else "[bold red]FAIL[/bold red]"
        info = " ".join(part for part in (check.witness, check.detail) if part)
        table.add_row(escape(check.name), str(check.n), status, escape(info) if not check.passed else "")

    console.print(table)
    color = "green" if report.passed else "red"
    console.print(f"[bold {color}]{report.status.value}[/bold {color}] {report.suite}")


@app.command()
def stats(
    domain: Optional[str] = typer.Option(None, "--domain", "-d", help="S, I or PT"),
):
    """
    List the registered statistics.
    """
    try:
        names = statistic_names(domain)
    except ValueError:
        _fail_input(PermtabError(f"unknown domain {domain!r}; choose from S, I, PT"))
    for name in names:
        typer.echo(name)


if __name__ == "__main__":
    app()

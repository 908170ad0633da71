# File: cubictsp/cli.py
"""
COMMAND LINE

    generate --family F --k K [--pole] [--format adj|dot] [--out FILE]
    triple   --in POLEFILE
    excess   --in GRAPHFILE [--witness]
    tsp      --in GRAPHFILE [--certificate] [--oracle]
    verify   --lemma 1|2 --k K [--family F] | --structure --kmax K | --kmax K
    report   --family F --kmax K [--csv FILE]
    info     --in FILE

Results go to stdout, logs and diagnostics to stderr.
Exit codes: 0 ok, 1 verification fail / oracle disagreement, 2 usage or input
error, 3 resource bound.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional

import typer
from loguru import logger
from pydantic import ValidationError
from rich.console import Console

from cubictsp.core.config import get_settings
from cubictsp.core.console_logger import setup_logger
from cubictsp.core.errors import CubicTspError, DomainError
from cubictsp.schemas.command import CommandConfig, CommandName, OutputFormat
from cubictsp.schemas.family import FamilyId, FamilyKind
from cubictsp.schemas.graph import Pole
from cubictsp.schemas.reports import Verdict
from cubictsp.services.constructions import family, pole_chain
from cubictsp.services.excess import Strategy, min_excess, pole_triple
from cubictsp.services.graph_core import graph_summary
from cubictsp.services.graph_io import format_any, read_any, read_graph, read_pole, to_dot, write_dot, write_graph
from cubictsp.services.tsp_solver import held_karp_tsp, tsp_length, validate_tour
from cubictsp.tasks.reports import (
    family_table,
    footer_lines,
    format_frame_text,
    lemma_lines,
    rows_to_frame,
    structure_lines,
    write_csv,
)
from cubictsp.tasks.verification import (
    theorem_table,
    verify_closed_forms,
    verify_lemma1,
    verify_lemma2,
    verify_structure,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_VERDICT_EXIT = {Verdict.PASS: EXIT_OK, Verdict.FAIL: EXIT_FAIL, Verdict.UNVERIFIED: EXIT_RESOURCE}

settings = get_settings()

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Cubic graphs with long graphic-TSP tours: constructions, excess, exact TSP, verification.",
)


# === OUTPUT HELPERS ===

def _out(line: str = "") -> None:
    typer.echo(line)


def _report_error(e: CubicTspError) -> int:
    logger.debug(f"{type(e).__name__}: {e}")
    typer.echo(f"error: {e}", err=True)
    return e.exit_code


# === HANDLERS ===

def _generate(config: CommandConfig) -> int:
    if config.pole:
        item = pole_chain(config.family, config.k)
    else:
        item = family(FamilyId(kind=config.family, k=config.k)).closed
    dot = config.output_format == OutputFormat.DOT

    if config.output_path is None:
        typer.echo(to_dot(item) if dot else format_any(item), nl=False)
    else:
        (write_dot if dot else write_graph)(item, config.output_path)
        graph = item.inner if isinstance(item, Pole) else item
        _out(f"wrote {config.output_path} ({graph.vertex_count} vertices, {graph.edge_count} edges)")
    return EXIT_OK


def _triple(config: CommandConfig) -> int:
    pole = read_pole(config.input_path)
    triple = pole_triple(
        pole, Strategy(config.strategy or Strategy.EXHAUSTIVE), config.enum_budget, config.bnb_node_budget
    )
    _out(f"{triple.q0} {triple.q2} {triple.n}")
    return EXIT_OK


def _excess(config: CommandConfig) -> int:
    graph = read_graph(config.input_path)
    excess, witness = min_excess(graph, budget=config.enum_budget)
    _out(f"excess = {excess}")
    if config.witness:
        _out("witness:")
        for u, v in witness.sorted_edges():
            _out(f"{u} {v}")
    return EXIT_OK


def _tsp(config: CommandConfig) -> int:
    graph = read_graph(config.input_path)
    result = tsp_length(graph, budget=config.enum_budget)
    _out(f"tsp = {result.length}")
    if config.certificate:
        validate_tour(graph, result.witness_tour)
        _out("tour = " + " ".join(str(v) for v in result.witness_tour.walk))
    if config.oracle:
        value = held_karp_tsp(graph, config.oracle_budget)
        _out(f"oracle = {value}")
        if value != result.length:
            logger.error(f"Oracle disagrees: solver {result.length}, Held-Karp {value}")
            typer.echo(f"error: oracle {value} disagrees with solver {result.length}", err=True)
            return EXIT_FAIL
    return EXIT_OK


def _kinds(config: CommandConfig) -> List[FamilyKind]:
    return [config.family] if config.family is not None else list(FamilyKind)


def _verify(config: CommandConfig) -> int:
    if config.lemma == 1:
        kind = config.family or FamilyKind.PLANAR_K4
        if kind == FamilyKind.THREECONN_PETERSEN:
            raise DomainError("lemma 1 applies to the planar and bipartite chains")
        report = verify_lemma1(
            pole_chain(kind, config.k),
            Strategy(config.strategy or Strategy.EXHAUSTIVE),
            config.enum_budget,
            config.bnb_node_budget,
        )
        for line in lemma_lines(report):
            _out(line)
        return _VERDICT_EXIT[report.verdict]

    if config.lemma == 2:
        report = verify_lemma2(
            pole_chain(FamilyKind.THREECONN_PETERSEN, config.k),
            Strategy(config.strategy or Strategy.AUTO),
            config.enum_budget,
            config.bnb_node_budget,
            config.symmetry_budget,
        )
        for line in lemma_lines(report):
            _out(line)
        return _VERDICT_EXIT[report.verdict]

    if config.structure:
        failed = False
        for kind in _kinds(config):
            checks = verify_structure(kind, config.k_max, config.symmetry_budget)
            for line in structure_lines(checks):
                _out(line)
            failed = failed or any(check.verdict == Verdict.FAIL for check in checks)
        return EXIT_FAIL if failed else EXIT_OK

    ok = True
    for kind in _kinds(config):
        agrees = verify_closed_forms(kind, config.k_max)
        _out(f"closed forms {kind.value} k <= {config.k_max}: {'pass' if agrees else 'fail'}")
        ok = ok and agrees
    return EXIT_OK if ok else EXIT_FAIL


def _report(config: CommandConfig) -> int:
    rows = theorem_table(config.family, config.k_max, config.enum_budget, config.bnb_node_budget)
    if config.plain:
        title = f"{config.family.value} family (limit {config.family.limit})"
        typer.echo(format_frame_text(rows_to_frame(rows), title), nl=False)
    else:
        Console(width=120).print(family_table(config.family, rows))
    for line in footer_lines(config.family, rows):
        _out(f"note: {line}")
    if config.csv_path is not None:
        write_csv(rows, config.csv_path)
        _out(f"wrote {config.csv_path}")
    return EXIT_OK


def _info(config: CommandConfig) -> int:
    item = read_any(config.input_path)
    if isinstance(item, Pole):
        _out(f"pole arity = {item.arity}")
        _out("stubs = " + " ".join(str(s) for s in item.stubs))
        graph = item.inner
    else:
        graph = item
    for key, value in graph_summary(graph).model_dump().items():
        _out(f"{key} = {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


_HANDLERS: Dict[CommandName, Callable[[CommandConfig], int]] = {
    CommandName.GENERATE: _generate,
    CommandName.TRIPLE: _triple,
    CommandName.EXCESS: _excess,
    CommandName.TSP: _tsp,
    CommandName.VERIFY: _verify,
    CommandName.REPORT: _report,
    CommandName.INFO: _info,
}


def run(config: CommandConfig) -> int:
    """Dispatch one parsed command and return its exit status."""
    logger.debug(f"Running {config.command.value}: {config.model_dump(exclude_defaults=True)}")
    try:
        return _HANDLERS[config.command](config)
    except CubicTspError as e:
        return _report_error(e)


def _execute(**fields) -> None:
    try:
        config = CommandConfig(**fields)
    except CubicTspError as e:
        raise typer.Exit(_report_error(e))
    except ValidationError as e:
        for err in e.errors():
            location = ".".join(str(part) for part in err["loc"]) or "arguments"
            typer.echo(f"error: --{location.replace('_', '-')}: {err['msg']}", err=True)
        raise typer.Exit(EXIT_USAGE)
    raise typer.Exit(run(config))


# === TYPER COMMANDS ===

InPath = typer.Option(..., "--in", help="Graph or pole file")
EnumBudget = typer.Option(settings.enum_budget, "--enum-budget", help="Max cycle-space dimension walked exhaustively")
OracleBudget = typer.Option(settings.oracle_budget, "--oracle-budget", help="Max vertices for Held-Karp")
SymmetryBudget = typer.Option(settings.symmetry_budget, "--symmetry-budget", help="Max pole order for symmetry search")
NodeBudget = typer.Option(settings.bnb_node_budget, "--node-budget", help="Branch-and-bound node cap")


def _budgets(enum_budget: int, oracle_budget: int, symmetry_budget: int, node_budget: int) -> dict:
    return {
        "enum_budget": enum_budget,
        "oracle_budget": oracle_budget,
        "symmetry_budget": symmetry_budget,
        "bnb_node_budget": node_budget,
    }


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="stderr log level (DEBUG, INFO, WARNING, ERROR)"),
):
    setup_logger(
        level=log_level or settings.log_level,
        log_dir=settings.log_dir,
        enable_file_logs=settings.debug_mode,
    )


@app.command()
def generate(
    family_kind: FamilyKind = typer.Option(..., "--family", help="planar, bipartite or threeconn"),
    k: int = typer.Option(0, "--k", help="Family index"),
    pole: bool = typer.Option(False, "--pole", help="Emit the k-th pole instead of the closed graph"),
    output_format: OutputFormat = typer.Option(OutputFormat.ADJ, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
):
    """Build a family member and write it as adjacency text or DOT."""
    _execute(
        command=CommandName.GENERATE,
        family=family_kind,
        k=k,
        pole=pole,
        output_format=output_format,
        output_path=out,
        **_budgets(settings.enum_budget, settings.oracle_budget, settings.symmetry_budget, settings.bnb_node_budget),
    )


@app.command()
def triple(
    in_path: Path = InPath,
    strategy: Optional[str] = typer.Option(None, "--strategy", help="exhaustive (default) or auto"),
    enum_budget: int = EnumBudget,
    node_budget: int = NodeBudget,
):
    """Print t(P) = q0 q2 n of a pole file."""
    _execute(
        command=CommandName.TRIPLE,
        input_path=in_path,
        strategy=strategy,
        **_budgets(enum_budget, settings.oracle_budget, settings.symmetry_budget, node_budget),
    )


@app.command()
def excess(
    in_path: Path = InPath,
    witness: bool = typer.Option(False, "--witness", help="Also print a minimizing factor as an edge list"),
    enum_budget: int = EnumBudget,
):
    """Print the minimum excess of a cubic graph."""
    _execute(
        command=CommandName.EXCESS,
        input_path=in_path,
        witness=witness,
        **_budgets(enum_budget, settings.oracle_budget, settings.symmetry_budget, settings.bnb_node_budget),
    )


@app.command()
def tsp(
    in_path: Path = InPath,
    certificate: bool = typer.Option(False, "--certificate", help="Print the optimal tour"),
    oracle: bool = typer.Option(False, "--oracle", help="Cross-check with Held-Karp"),
    enum_budget: int = EnumBudget,
    oracle_budget: int = OracleBudget,
):
    """Exact graphic-TSP length of a connected cubic graph."""
    _execute(
        command=CommandName.TSP,
        input_path=in_path,
        certificate=certificate,
        oracle=oracle,
        **_budgets(enum_budget, oracle_budget, settings.symmetry_budget, settings.bnb_node_budget),
    )


@app.command()
def verify(
    lemma: Optional[int] = typer.Option(None, "--lemma", help="1 (A -> A') or 2 (B -> B'')"),
    k: int = typer.Option(0, "--k", help="Index of the input pole in its chain"),
    family_kind: Optional[FamilyKind] = typer.Option(None, "--family"),
    structure: bool = typer.Option(False, "--structure", help="Check the structural claims up to --kmax"),
    k_max: int = typer.Option(2, "--kmax"),
    strategy: Optional[str] = typer.Option(None, "--strategy", help="exhaustive or auto"),
    enum_budget: int = EnumBudget,
    symmetry_budget: int = SymmetryBudget,
    node_budget: int = NodeBudget,
):
    """Run a lemma check, the structure checks, or (default) the closed-form checks."""
    _execute(
        command=CommandName.VERIFY,
        lemma=lemma,
        k=k,
        family=family_kind,
        structure=structure,
        k_max=k_max,
        strategy=strategy,
        **_budgets(enum_budget, settings.oracle_budget, symmetry_budget, node_budget),
    )


@app.command()
def report(
    family_kind: FamilyKind = typer.Option(..., "--family"),
    k_max: int = typer.Option(2, "--kmax"),
    csv: Optional[Path] = typer.Option(None, "--csv", help="Write the rows as CSV"),
    plain: bool = typer.Option(False, "--plain", help="Plain-text table with the CSV columns instead of the rich table"),
    enum_budget: int = EnumBudget,
    node_budget: int = NodeBudget,
):
    """Per-k table of closed forms, bounds, exact tsp and ratios."""
    _execute(
        command=CommandName.REPORT,
        family=family_kind,
        k_max=k_max,
        csv_path=csv,
        plain=plain,
        **_budgets(enum_budget, settings.oracle_budget, settings.symmetry_budget, node_budget),
    )


@app.command()
def info(in_path: Path = InPath):
    """Summary of a graph or pole file: order, cubicity, connectivity, bipartite, planar."""
    _execute(
        command=CommandName.INFO,
        input_path=in_path,
        **_budgets(settings.enum_budget, settings.oracle_budget, settings.symmetry_budget, settings.bnb_node_budget),
    )


if __name__ == "__main__":
    app()

"""Command-line interface for cutwidth-bounds."""

import logging
import os
import sys
from collections import Counter
from pathlib import Path
from typing import Optional

import click
import structlog
import yaml
from rich.console import Console
from rich.table import Table

from app.config import DEFAULT_CONFIG, ConfigManager
from app.core.composer import BoundCertificate, certify
from app.core.exceptions import (
    BudgetExceededError,
    ConsistencyError,
    CutwidthError,
    GraphError,
    ParseError,
)
from app.core.graph_file import (
    read_graph,
    read_partition,
    serialize_graph,
    serialize_ordering,
    serialize_partition,
    write_graph,
    write_ordering,
    write_partition,
)
from app.core.multigraph import underlying_undirected
from app.core.partition import scc_partition
from app.core.solver import exact_cutwidth
from app.families import FAMILIES
from app.verify import SUITES, run_suites

console = Console(stderr=True)
logger = structlog.get_logger()

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_CONSISTENCY = 4

GEN_PARAMS = ("x", "y", "n", "seed", "classes", "max_multiplicity", "density")


def setup_logging(config: Optional[dict]) -> None:
    """Set up logging configuration.

    Args:
        config: The configuration dictionary
    """
    if not config:
        config = {}

    log_config = config.get("logging", {})

    # Check environment variable first, then config file
    env_log_level = os.environ.get("LOGLEVEL", "").upper()
    log_level = (env_log_level or log_config.get("level", "warning")).upper()
    if not isinstance(logging.getLevelName(log_level), int):
        log_level = "WARNING"

    base_processors = [
        structlog.stdlib.filter_by_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]

    # stdout is reserved for the report lines
    logging.basicConfig(
        level=getattr(logging, log_level),
        format="%(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )

    if log_config.get("format", "console") == "json":
        processors = [
            *base_processors,
            structlog.processors.dict_tracebacks,
            structlog.processors.JSONRenderer(),
        ]
    else:
        processors = [
            *base_processors,
            structlog.dev.ConsoleRenderer(
                colors=False, exception_formatter=structlog.dev.plain_traceback
            ),
        ]

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
    )

    logger.debug("Logging initialized", log_level=log_level, env_log_level=env_log_level)


def _load_config(config_path: Optional[str]) -> ConfigManager:
    config_manager = ConfigManager(config_path)
    setup_logging(config_manager.get_config())
    return config_manager


def _fail(message: str, code: int, **context) -> None:
    logger.error(message, exit_code=code, **context)
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _exit_code(error: CutwidthError) -> int:
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, ConsistencyError):
        return EXIT_CONSISTENCY
    return EXIT_INPUT


def _echo_ordering(ordering) -> None:
    click.echo(f"ordering {serialize_ordering(ordering).strip()}")


@click.group()
def cli():
    """cutwidth-bounds - exact cutwidth and partition-based cutwidth bounds."""
    pass


@cli.command("version", help="Show version information")
def show_version():
    """Show version information."""
    try:
        from importlib.metadata import PackageNotFoundError, version

        cwb_version = version("cutwidth-bounds")
        console.print(f"[blue]cutwidth-bounds version {cwb_version}[/blue]")
        click.echo(f"version {cwb_version}")
    except (ImportError, PackageNotFoundError):
        console.print("[red]Error: Could not determine version[/red]")


@cli.command("cutwidth")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--ordering-out",
    type=click.Path(dir_okay=False),
    help="Write the witness ordering here",
)
@click.option("--budget", type=click.IntRange(min=1), help="Largest vertex count to solve exactly")
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def cmd_cutwidth(
    graph: str, ordering_out: Optional[str], budget: Optional[int], config: Optional[str]
):
    """Compute the exact cutwidth of GRAPH and an optimal ordering."""
    config_manager = _load_config(config)
    if budget is None:
        budget = config_manager.get_config()["solver"]["budget"]

    try:
        g = read_graph(graph)
        if g.directed:
            click.echo("notice directed input, using the underlying undirected multigraph")
            g = underlying_undirected(g)
        result = exact_cutwidth(g, budget)
    except ParseError as e:
        _fail(str(e), EXIT_INPUT, path=e.path, line=e.line)
    except CutwidthError as e:
        _fail(str(e), _exit_code(e), path=graph)

    click.echo(f"cutwidth {result.value}")
    _echo_ordering(result.witness)
    if ordering_out:
        write_ordering(ordering_out, result.witness)
        logger.info("Ordering written", path=ordering_out)


def _echo_certificate(certificate: BoundCertificate) -> None:
    click.echo(f"x {certificate.x}")
    click.echo(f"y {certificate.y}")
    click.echo(f"bound_kind {certificate.bound_kind.value}")
    click.echo(f"achieved {certificate.achieved}")
    click.echo(f"bound {certificate.bound}")
    # classes are solved exactly, and each induced class is a subgraph of G
    click.echo(f"lower {certificate.y}")
    if certificate.choices:
        for choice in certificate.choices:
            click.echo(f"class {choice.class_index} {choice.direction.value} n {choice.n}")
    else:
        for index, direction in enumerate(certificate.directions):
            click.echo(f"class {index} {direction.value}")
    _echo_ordering(certificate.ordering)


@cli.command("bound")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--partition",
    "partition_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Partition file",
)
@click.option(
    "--scc",
    is_flag=True,
    help="Partition a directed graph into its strongly connected components",
)
@click.option(
    "--method",
    type=click.Choice(["simple", "theorem"]),
    default="theorem",
    show_default=True,
    help="simple certifies 2x + y, theorem certifies 1.5x + y",
)
@click.option("--budget", type=click.IntRange(min=1), help="Largest vertex count to solve exactly")
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def cmd_bound(
    graph: str,
    partition_path: Optional[str],
    scc: bool,
    method: str,
    budget: Optional[int],
    config: Optional[str],
):
    """Build a partition-compatible ordering of GRAPH and the bound it certifies."""
    config_manager = _load_config(config)
    if budget is None:
        budget = config_manager.get_config()["solver"]["budget"]
    if bool(partition_path) == scc:
        _fail("give exactly one of --partition and --scc", EXIT_INPUT)

    try:
        g = read_graph(graph)
        if scc:
            if not g.directed:
                raise GraphError("--scc needs a directed graph")
            p = scc_partition(g)
        else:
            p = read_partition(partition_path, g.vertex_count)
        if g.directed:
            g = underlying_undirected(g)
        certificate = certify(g, p, method, budget=budget)
    except ParseError as e:
        _fail(str(e), EXIT_INPUT, path=e.path, line=e.line)
    except CutwidthError as e:
        _fail(str(e), _exit_code(e), path=graph)

    logger.info(
        "Bound certified",
        method=method,
        classes=len(p),
        x=certificate.x,
        y=certificate.y,
        achieved=certificate.achieved,
    )
    _echo_certificate(certificate)


@cli.command("gen")
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.option("--x", "x", type=int, help="External width parameter (lower-g, lower-k, lower-h)")
@click.option("--y", "y", type=int, help="Internal width parameter (lower-g, lower-k, lower-h)")
@click.option("--n", "n", type=int, help="Size parameter (nolow, random)")
@click.option("--seed", type=int, help="Seed (random)")
@click.option("--classes", type=int, help="Number of partition classes (random)")
@click.option("--max-multiplicity", type=int, help="Largest edge multiplicity (random)")
@click.option("--density", type=float, help="Edge probability per vertex pair (random)")
@click.option(
    "--out",
    type=click.Path(dir_okay=False),
    help="Write <out>.graph and <out>.partition",
)
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def cmd_gen(family: str, out: Optional[str], config: Optional[str], **params):
    """Generate a named graph family."""
    _load_config(config)
    # fixed order keeps the generated comment line stable
    params = {key: params[key] for key in GEN_PARAMS if params[key] is not None}

    generator = FAMILIES[family](params)
    try:
        instance = generator.generate()
    except GraphError as e:
        _fail(str(e), EXIT_INPUT, family=family)

    comments = [generator.describe()]
    if out is None:
        click.echo(serialize_graph(instance.graph, comments), nl=False)
        if instance.partition is not None:
            click.echo("# partition")
            click.echo(serialize_partition(instance.partition), nl=False)
        return

    graph_path = Path(f"{out}.graph")
    write_graph(graph_path, instance.graph, comments)
    click.echo(f"graph {graph_path}")
    if instance.partition is not None:
        partition_path = Path(f"{out}.partition")
        write_partition(partition_path, instance.partition)
        click.echo(f"partition {partition_path}")


def _summary_table(results) -> Table:
    passed = Counter(r.check for r in results if r.passed)
    failed = Counter(r.check for r in results if not r.passed)
    table = Table(title="Verification", show_header=True, header_style="bold magenta")
    table.add_column("Suite", style="cyan")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", justify="right", style="red")
    for check in sorted(set(passed) | set(failed)):
        table.add_row(check, str(passed[check]), str(failed[check]))
    return table


@cli.command("verify")
@click.argument("suite", type=click.Choice([*sorted(SUITES), "all"]))
@click.option("--trials", type=click.IntRange(min=1), help="Instances per randomized suite")
@click.option("--seed", type=int, help="Base seed")
@click.option(
    "--max-n",
    type=click.IntRange(min=1),
    help="Largest vertex count for random instances",
)
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def cmd_verify(
    suite: str,
    trials: Optional[int],
    seed: Optional[int],
    max_n: Optional[int],
    config: Optional[str],
):
    """Run a verification suite; exits 1 if any check fails."""
    config_manager = _load_config(config)
    names = list(SUITES) if suite == "all" else [suite]
    settings = {
        name: config_manager.suite_settings(name, trials=trials, seed=seed, max_n=max_n)
        for name in names
    }

    results = run_suites(names, settings)
    for result in results:
        click.echo(result.report_line())
    console.print(_summary_table(results))

    failed = sum(not r.passed for r in results)
    if failed:
        logger.error("Verification failed", failed=failed, total=len(results))
        sys.exit(EXIT_VERIFY_FAILED)


@cli.group()
def config():
    """Manage configuration."""
    pass


@config.command("show")
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def show_config(config: Optional[str]):
    """Show current configuration."""
    config_manager = ConfigManager(config)
    click.echo(yaml.dump(config_manager.get_config(), default_flow_style=False, sort_keys=False))


@config.command("validate")
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to configuration file")
def validate_config(config: Optional[str]):
    """Validate configuration file."""
    config_manager = ConfigManager(config)
    if config_manager.validate_config():
        click.echo("Configuration is valid.")
    else:
        click.echo("Configuration is invalid.")
        sys.exit(1)


@cli.command()
@click.option(
    "--path",
    "-p",
    type=click.Path(),
    default="cwb.yaml",
    help="Path to create the config file",
)
def init(path: str):
    """Initialize a new configuration file with default settings."""
    if os.path.exists(path):
        click.echo(
            f"Error: {path} already exists. "
            "Please choose a different path or remove the existing file."
        )
        sys.exit(1)

    try:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(DEFAULT_CONFIG, f, default_flow_style=False, sort_keys=False)
        click.echo(f"Created default configuration at {path}")

        click.echo("\nNext steps:")
        click.echo("1. Review and customize the configuration file")
        click.echo(f"2. Run the checks: cwb verify all -c {path}")
    except Exception as e:
        click.echo(f"Error creating config file: {e}")
        sys.exit(1)


if __name__ == "__main__":
    cli()

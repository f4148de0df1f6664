"""
Command line for the graph discord toolkit
"""

import functools
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

import click
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import DimensionError, GraphDiscordError, GraphInputError, VerificationMismatchError
from app.core.logging import setup_logging
from app.models.graph import ClusterLabeling, Graph, Sign
from app.models.run_config import Command, OutputFormat, RunConfig
from app.services.census_service import CensusService
from app.services.generator_service import GeneratorService
from app.services.graph_service import GraphService
from app.services.io_service import ENTROPY_COLUMNS, REPORT_COLUMNS, IOService, parse_permutation
from app.services.measure_service import MeasureService
from app.services.oracle_service import OracleService
from app.services.search_service import EXHAUSTIVE, SAMPLED, LabelingSearchService
from app.services.spectral_service import SpectralService

logger = logging.getLogger(__name__)

GRAPH6_SUFFIXES = {".g6", ".graph6"}


def handle_errors(command):
    """Map the error hierarchy onto exit codes"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except GraphDiscordError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def input_options(command):
    """--input PATH | --family NAME --params ..."""
    command = click.option("--params", default=None, help='Family parameters, e.g. "n=4,r=2,seed=1"')(command)
    command = click.option("--family", default=None, help="Generated family name")(command)
    command = click.option("--input", "input_path", type=click.Path(path_type=Path), default=None,
                           help="Edge-list file (or .g6 file)")(command)
    return command


def report_options(command):
    command = click.option("--trials", type=int, default=None, help="Random trials")(command)
    command = click.option("--seed", type=int, default=None, help="Random seed")(command)
    command = click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
                           default=None, help="Report format")(command)
    command = click.option("--sign", default=None, help="l | q | both")(command)
    command = click.option("--n", type=int, default=None, help="Cluster size n")(command)
    command = click.option("--m", type=int, default=None, help="Number of clusters m")(command)
    return command


def build_config(command: Command, **options) -> RunConfig:
    """Validate flags into a RunConfig"""
    family_spec = None
    if options.get("family") is not None:
        family_spec = IOService.parse_family(options["family"], options.get("params"))
    sign = options.get("sign")
    try:
        signs = RunConfig.parse_signs(sign) if sign else [Sign.from_label(s) for s in settings.DEFAULT_SIGNS]
        return RunConfig(
            command=command,
            input_path=options.get("input_path"),
            family=family_spec,
            m=options.get("m"),
            n=options.get("n"),
            labeling=options.get("labeling"),
            signs=signs,
            output_format=options.get("output_format") or settings.DEFAULT_FORMAT,
            seed=settings.DEFAULT_SEED if options.get("seed") is None else options["seed"],
            trials=settings.DEFAULT_TRIALS if options.get("trials") is None else options["trials"],
        )
    except ValidationError as e:
        raise GraphInputError(f"Invalid arguments: {e.errors()[0]['msg']}") from e
    except ValueError as e:
        raise GraphInputError(str(e)) from e


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise GraphInputError(f"cannot read {path}: {e}") from e


def load_input(config: RunConfig) -> Tuple[Graph, ClusterLabeling, str]:
    """Graph, labeling (from file, family or --labeling FILE) and a graph id"""
    m, n = config.m, config.n
    document = None
    permutation = None
    if config.input_path is not None:
        graph_id = config.input_path.stem
        text = _read_text(config.input_path)
        if config.input_path.suffix in GRAPH6_SUFFIXES:
            lines = [line for line in text.splitlines() if line.strip()]
            if not lines:
                raise GraphInputError(f"{config.input_path} holds no graph6 line")
            g = IOService.parse_graph6(lines[0])
            if m is None or n is None:
                raise GraphInputError("graph6 input needs --m and --n")
        else:
            document = IOService.parse_edge_list(text)
            g = document.graph
            m, n = m or document.m, n or document.n
    else:
        graph_id = GeneratorService.describe(config.family)
        g, lab = GeneratorService.build(config.family)
        m, n = m or lab.m, n or lab.n
        permutation = lab.order if (m, n) == (lab.m, lab.n) else None
    if g.vertex_count != m * n:
        raise DimensionError(f"graph has {g.vertex_count} vertices but m*n = {m}*{n} = {m * n}")
    source = config.labeling
    if source == "natural":
        return g, GraphService.make_labeling(m, n), graph_id
    if source not in (None, EXHAUSTIVE, SAMPLED):
        return g, GraphService.make_labeling(m, n, parse_permutation(_read_text(Path(source)))), graph_id
    if document is not None:
        try:
            return g, document.labeling(m, n), graph_id
        except ValidationError as e:
            raise GraphInputError(f"Invalid labeling: {e.errors()[0]['msg']}") from e
    return g, GraphService.make_labeling(m, n, permutation), graph_id


def emit(payload, fmt: OutputFormat, columns=None):
    click.echo(IOService.render(payload, fmt, columns))


@click.group()
@click.option("--log-level", default=None, help="Override LOG_LEVEL")
def cli(log_level: Optional[str]):
    """Graph theoretic quantum discord of graph density matrices"""
    setup_logging(log_level)


@cli.command()
@input_options
@report_options
@click.option("--labeling", default=None, help="natural | FILE (defaults to the input's own labeling)")
@click.option("--entropy", is_flag=True, help="Add fixed-basis discord in the computational and pointer bases")
@handle_errors
def compute(**options):
    """QD(G) with its violation breakdown, one report per sign"""
    config = build_config(Command.COMPUTE, **options)
    if config.labeling in (EXHAUSTIVE, SAMPLED):
        raise GraphInputError(f"--labeling {config.labeling} searches labelings; use the classify command")
    g, lab, graph_id = load_input(config)
    records: List[dict] = []
    for s in config.signs:
        report = MeasureService.qd(g, lab, s, graph_id)
        record = report.to_record(include_pairs=config.output_format is OutputFormat.JSON)
        if options.get("entropy"):
            rho = GraphService.density_matrix(GraphService.block_decompose(g, lab), s)
            record["discord_computational"] = SpectralService.fixed_basis_discord(rho, lab.m, lab.n).discord_fixed_basis
            record["discord_pointer"] = SpectralService.pointer_discord(rho, lab.m, lab.n).discord_fixed_basis
        records.append(record)
        logger.info(f"Computed QD={report.qd_total} for {graph_id} (s={int(s):+d})")
    columns = REPORT_COLUMNS + ENTROPY_COLUMNS if options.get("entropy") else REPORT_COLUMNS
    emit(records, config.output_format, columns)


@cli.command()
@input_options
@report_options
@click.option("--labeling", default=None, help="exhaustive | random (default: exhaustive up to the vertex cap)")
@handle_errors
def classify(**options):
    """Min / max QD(G) over labelings of the graph"""
    config = build_config(Command.CLASSIFY, **options)
    g, lab, _ = load_input(config)
    mode = config.labeling if config.labeling in (EXHAUSTIVE, SAMPLED) else None
    records = [
        LabelingSearchService.search(g, lab.m, lab.n, s, mode=mode, trials=config.trials, seed=config.seed).to_record()
        for s in config.signs
    ]
    emit(records, config.output_format)


@cli.command()
@click.option("--order", type=int, default=None, help="Largest matrix order checked")
@click.option("--graphs", type=int, default=0, help="Random graphs compared against the block oracle")
@report_options
@handle_errors
def verify(order: Optional[int], graphs: int, **options):
    """Check the counting measures against direct matrix algebra"""
    config = build_config(Command.VERIFY, **options)
    order = settings.EXHAUSTIVE_ORDER_LIMIT if order is None else order
    summaries = [("measures", OracleService.exhaustive_equivalence(order, config.trials, config.seed))]
    converse = None
    if graphs:
        m = config.m or 2
        n = config.n or 4
        summaries.append(("qd", OracleService.qd_equivalence(graphs, m, n, config.seed, config.signs)))
        converse = OracleService.discord_converse(graphs, m, n, config.seed, config.signs)
    records = [{"suite": name, **summary.to_record()} for name, summary in summaries]
    # Reported only; a QD > 0 state without discord does not fail the run
    if converse is not None:
        records.append({"suite": "converse", **converse.to_record()})
        for failure in converse.failures:
            click.echo(failure, err=True)
    emit(records, config.output_format)
    mismatches = sum(summary.mismatches for _, summary in summaries)
    if mismatches:
        for _, summary in summaries:
            for failure in summary.failures:
                click.echo(failure, err=True)
        raise VerificationMismatchError(f"{mismatches} mismatches between measures and oracle")


@cli.command()
@click.option("--family", required=True, help="Generated family name")
@click.option("--params", default=None, help='Family parameters, e.g. "d=3"')
@click.option("--encoding", type=click.Choice(["edgelist", "graph6"]), default="edgelist")
@handle_errors
def generate(family: str, params: Optional[str], encoding: str):
    """Emit a generated family as edge-list text or graph6"""
    config = build_config(Command.GENERATE, family=family, params=params)
    g, lab = GeneratorService.build(config.family)
    if encoding == "graph6":
        click.echo(IOService.format_graph6(g))
    else:
        click.echo(IOService.format_edge_list(g, lab), nl=False)


@cli.command(name="enumerate")
@click.option("--input", "input_path", type=click.Path(path_type=Path), default=None,
              help="graph6 file (default: standard input)")
@click.option("--with-min", is_flag=True, help="Also search labelings for the minimum QD")
@report_options
@handle_errors
def enumerate_graphs(input_path: Optional[Path], with_min: bool, **options):
    """QD census of a graph6 stream under the natural labeling"""
    config = build_config(Command.ENUMERATE, **options)
    text = _read_text(input_path) if input_path is not None else click.get_text_stream("stdin").read()
    records, skipped = CensusService.census(
        text.splitlines(), config.m, config.n, config.signs,
        with_min=with_min, trials=config.trials, seed=config.seed,
    )
    if skipped:
        click.echo(f"skipped {skipped} malformed graph6 lines", err=True)
    if not records and config.output_format is not OutputFormat.JSON:
        return
    emit([record.to_record() for record in records], config.output_format)

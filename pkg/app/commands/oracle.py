"""
`gap` and `certify`: exact checks of an independent set on a small graph.
"""

from typing import Optional

import click

from app.commands.common import CommandError, handle_errors
from app.config import settings
from app.dependencies.loaders import load_graph, read_text
from app.exceptions import InvariantViolation
from app.services.bench import gap_report
from app.services.generators import greedy_initial_is
from app.services.graph_io import parse_is
from app.services.oracles import certify_maximal, certify_swap_free


def _load_set(g, is_path: Optional[str]):
    return parse_is(read_text(is_path)) if is_path else greedy_initial_is(g)


@click.command("gap")
@click.option("--graph", "graph_path", type=click.Path(dir_okay=False), required=True)
@click.option("--is", "is_path", type=click.Path(dir_okay=False), help="IS file (default: greedy)")
@click.option("--cap", type=click.IntRange(min=1), default=settings.ORACLE_CAP, show_default=True)
@handle_errors
def gap_command(graph_path: str, is_path: Optional[str], cap: int):
    """Print alpha, gap and gamma of an independent set."""
    g = load_graph(graph_path)
    report = gap_report(g, _load_set(g, is_path), cap)
    click.echo(f"alpha={report.alpha} is_size={report.is_size} gap={report.gap} gamma={report.gamma:.6f}")


@click.command("certify")
@click.option("--graph", "graph_path", type=click.Path(dir_okay=False), required=True)
@click.option("--is", "is_path", type=click.Path(dir_okay=False), help="IS file (default: greedy)")
@click.option("-k", "k", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--cap", type=click.IntRange(min=1), default=settings.ORACLE_CAP, show_default=True)
@handle_errors
def certify_command(graph_path: str, is_path: Optional[str], k: int, cap: int):
    """Check maximality and the absence of j-swaps for j <= k."""
    g = load_graph(graph_path)
    members = _load_set(g, is_path)
    bad = certify_maximal(g, members)
    if bad is not None:
        raise CommandError(f"not a maximal independent set at vertex {bad}", InvariantViolation.exit_code)
    if k:
        witness = certify_swap_free(g, members, k, cap=cap)
        if witness is not None:
            raise CommandError(
                f"level-{witness.level} swap: out={witness.swap_out} in={witness.swap_in}",
                InvariantViolation.exit_code,
            )
    click.echo("OK")

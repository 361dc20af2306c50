"""
`gen-graph` and `gen-ops`: write generated inputs in the text formats.
"""

from typing import Optional

import click

from app.commands.common import handle_errors, output
from app.config import settings
from app.dependencies.loaders import load_graph
from app.schemas.bench import OpMix, PlrParams
from app.services.generators import (
    gen_op_stream,
    gen_plr,
    gen_subdivided_clique,
    gen_subdivided_hypercube,
)
from app.services.graph_io import serialize_graph, serialize_is, serialize_ops


@click.command("gen-graph")
@click.option("--family", type=click.Choice(["plr", "kclique", "hypercube"]), default="plr", show_default=True)
@click.option("--alpha", type=float, help="PLR: log of the degree-1 vertex count")
@click.option("--beta", type=float, help="PLR: degree distribution exponent")
@click.option("-n", "size", type=int, help="kclique/hypercube: order n of K'_n or Q'_n")
@click.option("--seed", type=click.IntRange(min=0), default=settings.SEED, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Graph destination (default stdout)")
@click.option("--is-out", type=click.Path(dir_okay=False), help="Write the original-vertex IS of K'_n / Q'_n here")
@handle_errors
def gen_graph_command(family, alpha, beta, size, seed, out: Optional[str], is_out: Optional[str]):
    """Generate a PLR graph or a subdivided clique / hypercube."""
    seed_is = None
    if family == "plr":
        if alpha is None or beta is None:
            raise click.UsageError("--family plr needs --alpha and --beta")
        g = gen_plr(PlrParams(alpha=alpha, beta=beta, seed=seed))
    else:
        if size is None:
            raise click.UsageError(f"--family {family} needs -n")
        builder = gen_subdivided_clique if family == "kclique" else gen_subdivided_hypercube
        g, seed_is = builder(size)
    with output(out) as handle:
        handle.write(serialize_graph(g))
    if is_out and seed_is is not None:
        with output(is_out) as handle:
            handle.write(serialize_is(seed_is))


@click.command("gen-ops")
@click.option("--graph", "graph_path", type=click.Path(dir_okay=False), required=True)
@click.option("--count", type=click.IntRange(min=0), required=True)
@click.option("--mix", default="0.1,0.1,0.4,0.4", show_default=True, help="Op weights av,rv,ae,re")
@click.option("--seed", type=click.IntRange(min=0), default=settings.SEED, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Op stream destination (default stdout)")
@handle_errors
def gen_ops_command(graph_path: str, count: int, mix: str, seed: int, out: Optional[str]):
    """Generate a random op stream valid on the given graph."""
    g = load_graph(graph_path)
    ops = gen_op_stream(g, count, OpMix.parse(mix), seed)
    with output(out) as handle:
        handle.write(serialize_ops(ops))

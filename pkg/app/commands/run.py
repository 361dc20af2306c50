"""
`run`: replay an op stream through one engine and emit the metrics CSV.
"""

from typing import Optional

import click

from app.commands.common import handle_errors, output
from app.config import settings
from app.schemas.bench import EngineName, InitPolicy, OpMix, PlrParams, RunConfig
from app.services import bench

ENGINE_CHOICES = [e.value for e in EngineName]
INIT_CHOICES = [p.value for p in InitPolicy]


@click.command("run")
@click.option(
    "--engine", type=click.Choice(ENGINE_CHOICES), default=settings.ENGINE, envvar="DYNMIS_ENGINE", show_default=True
)
@click.option(
    "--graph", "graph_path", type=click.Path(dir_okay=False), default=settings.GRAPH, envvar="DYNMIS_GRAPH",
    help="Base graph file",
)
@click.option(
    "--ops", "ops_path", type=click.Path(dir_okay=False), default=settings.OPS, envvar="DYNMIS_OPS",
    help="Op stream file",
)
@click.option(
    "--gen-ops", type=click.IntRange(min=0), default=settings.GEN_OPS, envvar="DYNMIS_GEN_OPS",
    help="Generate this many ops when --ops is not given",
)
@click.option(
    "--mix", default=settings.MIX, envvar="DYNMIS_MIX", show_default=True, help="Generated op weights av,rv,ae,re"
)
@click.option("--init", type=click.Choice(INIT_CHOICES), default=settings.INIT, envvar="DYNMIS_INIT", show_default=True)
@click.option(
    "--init-file", "init_path", type=click.Path(dir_okay=False), default=settings.INIT_FILE,
    envvar="DYNMIS_INIT_FILE", help="Initial IS file for --init file",
)
@click.option(
    "--check-every", type=click.IntRange(min=0), default=settings.CHECK_EVERY, envvar="DYNMIS_CHECK_EVERY",
    show_default=True,
)
@click.option(
    "--lenient", is_flag=True, default=settings.LENIENT, envvar="DYNMIS_LENIENT",
    help="Skip invalid ops instead of failing",
)
@click.option("--seed", type=click.IntRange(min=0), default=settings.SEED, envvar="DYNMIS_SEED", show_default=True)
@click.option("--repeat", type=click.IntRange(min=1), default=settings.REPEAT, envvar="DYNMIS_REPEAT", show_default=True)
@click.option(
    "--csv-out", type=click.Path(dir_okay=False), default=settings.CSV_OUT, envvar="DYNMIS_CSV_OUT",
    help="CSV destination (default stdout)",
)
@click.option(
    "--plr", "plr_text", default=settings.PLR, envvar="DYNMIS_PLR",
    help="ALPHA,BETA of a PLR input; adds the expected ratio to the summary",
)
@handle_errors
def run_command(
    engine: str,
    graph_path: Optional[str],
    ops_path: Optional[str],
    gen_ops: int,
    mix: str,
    init: str,
    init_path: Optional[str],
    check_every: int,
    lenient: bool,
    seed: int,
    repeat: int,
    csv_out: Optional[str],
    plr_text: Optional[str],
):
    """Replay an op stream through an engine; one CSV row per op."""
    plr = None
    if plr_text:
        alpha, beta = (float(x) for x in plr_text.split(","))
        plr = PlrParams(alpha=alpha, beta=beta)
    config = RunConfig(
        engine=engine,
        graph_path=graph_path,
        ops_path=ops_path,
        gen_ops=gen_ops,
        mix=OpMix.parse(mix),
        init=init,
        init_path=init_path,
        check_every=check_every,
        strict=not lenient,
        seed=seed,
        repeat=repeat,
        csv_out=csv_out,
        plr=plr,
    )
    with output(config.csv_out) as out:
        bench.run(config, out)

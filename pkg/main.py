"""
Command line entry point.
Dynamic approximate maximum independent set maintenance: replay, generators
and exact oracles.
"""

import logging
import logging.config
import os

import click

from app.commands.generate import gen_graph_command, gen_ops_command
from app.commands.oracle import certify_command, gap_command
from app.commands.run import run_command
from app.config import settings

__version__ = "1.0.0"


def configure_logging(level: str) -> None:
    """Load the ini file if present, then apply the level to the app logger."""
    if os.path.exists(settings.LOG_CONFIG):
        logging.config.fileConfig(settings.LOG_CONFIG, disable_existing_loggers=False)
    else:
        logging.basicConfig(format="%(levelname)-5.5s [%(name)s] %(message)s")
    logging.getLogger("app").setLevel(level.upper())


@click.group()
@click.version_option(__version__, prog_name="dynmis")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=settings.LOG_LEVEL,
    show_default=True,
)
def cli(log_level: str):
    """Maintain an approximate maximum independent set over a dynamic graph."""
    configure_logging(log_level)


cli.add_command(run_command)
cli.add_command(gen_graph_command)
cli.add_command(gen_ops_command)
cli.add_command(gap_command)
cli.add_command(certify_command)


if __name__ == "__main__":
    cli()

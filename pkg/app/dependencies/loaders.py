"""
Input resolution for a run: turns a RunConfig into the graph, the op
stream and the starting independent set.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set

from app.exceptions import ParseError
from app.models.graph import DynamicGraph, UpdateOp
from app.schemas.bench import InitPolicy, RunConfig
from app.services.generators import gen_op_stream, greedy_initial_is, prefix_ops
from app.services.graph_io import parse_graph, parse_is, parse_ops

logger = logging.getLogger(__name__)


@dataclass
class RunInputs:
    graph: DynamicGraph
    ops: List[UpdateOp]
    initial_is: Set[int]


def read_text(path: str) -> str:
    """
    Raises:
        ParseError: If the file cannot be read
    """
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: Optional[str], strict: bool = True) -> DynamicGraph:
    if path is None:
        return DynamicGraph()
    return parse_graph(read_text(path), strict=strict)


def load_ops(config: RunConfig, g: DynamicGraph) -> List[UpdateOp]:
    """Ops from the ops file, else `gen_ops` generated ops, else none."""
    if config.ops_path:
        return parse_ops(read_text(config.ops_path))
    if config.gen_ops:
        return gen_op_stream(g, config.gen_ops, config.mix, config.seed)
    return []


def resolve_run(config: RunConfig) -> RunInputs:
    """
    Load everything `run` replays.

    Under the prefix policy the graph handed back is edgeless, the initial
    set is every vertex and the stream starts with one insertion per edge.
    """
    g = load_graph(config.graph_path, strict=config.strict)
    ops = load_ops(config, g)

    if config.init is InitPolicy.FILE:
        initial = parse_is(read_text(config.init_path))
        return RunInputs(g, ops, initial)
    if config.init is InitPolicy.PREFIX:
        base, prefix = prefix_ops(g)
        logger.info("Prefix init: %d edge insertions ahead of %d ops", len(prefix), len(ops))
        return RunInputs(base, prefix + ops, set(base.adj))
    return RunInputs(g, ops, greedy_initial_is(g))

"""
Replay harness: drives one engine over an op stream, times every op,
optionally certifies the maintained set, and writes the metrics CSV.
"""

import csv
import logging
from typing import Iterable, List, Optional, Set, TextIO

from app.config import settings
from app.exceptions import InstanceTooLarge, InvariantViolation
from app.models.graph import DynamicGraph
from app.schemas.bench import CSV_COLUMNS, GapReport, MetricsRecord, RunConfig, RunSummary
from app.dependencies.loaders import RunInputs, resolve_run
from app.services.engines import get_engine
from app.services.framework import DynamicMIS, audit_hierarchy
from app.services.generators import plr_expected_ratio
from app.services.oracles import brute_force_alpha, certify_maximal, certify_swap_free
from app.utils.timing import Stopwatch, latency_stats, mean_ns

logger = logging.getLogger(__name__)


def check_state(mis: DynamicMIS) -> Optional[str]:
    """
    Full invariant check of a maintainer: hierarchy audit, maximality and
    the engine's swap-freeness. Returns None or a description of the failure.
    """
    try:
        audit_hierarchy(mis.state, mis.graph)
    except InvariantViolation as exc:
        return exc.detail
    bad = certify_maximal(mis.graph, mis.state.in_set)
    if bad is not None:
        return f"M is not maximal independent at vertex {bad}"
    if mis.engine.max_level:
        witness = certify_swap_free(
            mis.graph, mis.state.in_set, mis.engine.max_level, cap=settings.CHECK_VERTEX_CAP
        )
        if witness is not None:
            return (
                f"level-{witness.level} swap left behind: "
                f"out={witness.swap_out} in={witness.swap_in}"
            )
    return None


def _replay(
    config: RunConfig, inputs: RunInputs, out: Optional[TextIO], check_every: int
) -> tuple:
    mis = DynamicMIS(
        inputs.graph, get_engine(config.engine), inputs.initial_is, strict=config.strict
    )
    # greedy and file starts are maximal but may still hold swaps
    initial_swaps = mis.refine()
    if initial_swaps:
        logger.info("Initial set refined with %d swaps to |M|=%d", initial_swaps, mis.size)
    writer = csv.writer(out, lineterminator="\n") if out is not None else None
    latencies: List[int] = []
    swaps = skipped = 0
    total_ns = 0
    for step, op in enumerate(inputs.ops, start=1):
        label = op.kind.value
        with Stopwatch() as sw:
            result = mis.apply(op)
        latencies.append(sw.elapsed_ns)
        total_ns += sw.elapsed_ns
        swaps += result.swaps
        if not result.applied:
            skipped += 1
        checks = None
        failure = None
        if check_every and step % check_every == 0:
            failure = check_state(mis)
            checks = failure is None
        if writer is not None:
            record = MetricsRecord(
                step=step,
                op=label,
                is_size=mis.size,
                swaps=result.swaps,
                elapsed_ns=sw.elapsed_ns,
                checks=checks,
            )
            writer.writerow(record.csv_fields())
        if failure is not None:
            logger.error("Check failed at step %d (%s): %s", step, op, failure)
            raise InvariantViolation(f"step {step}: {failure}")
    return mis, initial_swaps, latencies, swaps, skipped, total_ns


def summary_line(summary: RunSummary) -> str:
    """The '#'-prefixed key=value line closing the CSV."""
    fields = {
        "steps": summary.steps,
        "total_swaps": summary.total_swaps,
        "final_is_size": summary.final_is_size,
        "skipped": summary.skipped,
        "initial_swaps": summary.initial_swaps,
        "mean_latency_ns": f"{summary.mean_latency_ns:.1f}",
        "p50_latency_ns": f"{summary.p50_latency_ns:.1f}",
        "p99_latency_ns": f"{summary.p99_latency_ns:.1f}",
        "mean_total_ns": f"{summary.mean_total_ns:.1f}",
    }
    for level, peak in sorted(summary.peak_candidates.items()):
        fields[f"peak_candidates_l{level}"] = peak
    if summary.plr_expected_ratio is not None:
        fields["plr_expected_ratio"] = f"{summary.plr_expected_ratio:.6f}"
    return "# " + " ".join(f"{k}={v}" for k, v in fields.items())


def run(config: RunConfig, out: TextIO) -> int:
    """
    Replay the configured stream and write the metrics CSV to `out`.

    Rows come from the first repetition only; further repetitions replay on
    fresh state and feed the mean total time.

    Returns:
        Exit code 0 (failures raise)

    Raises:
        ParseError: On unreadable or malformed input files
        GraphError: On an invalid op in strict mode
        InvariantViolation: On a bad initial set or a failed check
        InstanceTooLarge: If checks are requested on a graph above CHECK_VERTEX_CAP
    """
    inputs = resolve_run(config)
    check_every = config.check_every
    if check_every and inputs.graph.n > settings.CHECK_VERTEX_CAP:
        raise InstanceTooLarge(
            f"--check-every needs n <= {settings.CHECK_VERTEX_CAP}; graph has {inputs.graph.n}"
        )
    logger.info(
        "Run engine=%s n=%d m=%d ops=%d init=%s",
        config.engine.value,
        inputs.graph.n,
        inputs.graph.m,
        len(inputs.ops),
        config.init.value,
    )

    csv.writer(out, lineterminator="\n").writerow(CSV_COLUMNS)
    mis, initial_swaps, latencies, swaps, skipped, total_ns = _replay(
        config, inputs, out, check_every
    )
    totals = [total_ns]
    for _ in range(config.repeat - 1):
        *_, again_ns = _replay(config, resolve_run(config), None, 0)
        totals.append(again_ns)

    stats = latency_stats(latencies)
    hierarchy = mis.state.hierarchy
    summary = RunSummary(
        steps=len(inputs.ops),
        total_swaps=swaps,
        final_is_size=mis.size,
        mean_latency_ns=stats["mean"],
        p50_latency_ns=stats["p50"],
        p99_latency_ns=stats["p99"],
        mean_total_ns=mean_ns(totals),
        skipped=skipped,
        initial_swaps=initial_swaps,
        peak_candidates={j: hierarchy.peak[j] for j in range(1, hierarchy.max_level + 1)},
        plr_expected_ratio=plr_expected_ratio(config.plr) if config.plr else None,
    )
    out.write(summary_line(summary) + "\n")
    logger.info("Run done: %d swaps, final |M|=%d", swaps, mis.size)
    return 0


def gap_report(
    g: DynamicGraph, independent_set: Iterable[int], cap: Optional[int] = None
) -> GapReport:
    """
    alpha(G), alpha - |M| and alpha / |M| for an independent M.

    Raises:
        InstanceTooLarge: If g exceeds the oracle cap
        InvariantViolation: If M is not independent in g
    """
    members: Set[int] = set(independent_set)
    for v in members:
        if v not in g.adj or g.adj[v] & members:
            raise InvariantViolation(f"set is not independent in the graph at vertex {v}")
    alpha, _ = brute_force_alpha(g, cap)
    size = len(members)
    if size:
        gamma = alpha / size
    else:
        gamma = 1.0 if alpha == 0 else float("inf")
    return GapReport(alpha=alpha, is_size=size, gap=alpha - size, gamma=gamma)

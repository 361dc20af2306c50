"""
Pydantic schemas for generator parameters, run configuration and results.
"""

import math
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class EngineName(str, Enum):
    SIMPLE = "simple"
    ONESWAP = "oneswap"
    TWOSWAP = "twoswap"


class InitPolicy(str, Enum):
    GREEDY = "greedy"
    FILE = "file"
    PREFIX = "prefix"


# Generator Schemas
class PlrParams(BaseModel):
    """Power-law random graph parameters: count of degree-x vertices is e^alpha / x^beta."""

    alpha: float = Field(
        ...,
        gt=0,
        description="Log of the number of degree-1 vertices",
        examples=[6.907755],
        title="Alpha",
    )
    beta: float = Field(
        ...,
        gt=1,
        description="Log-log growth rate of the degree distribution",
        examples=[2.0],
        title="Beta",
    )
    seed: int = Field(default=0, ge=0, lt=2**64, title="Seed")

    @property
    def max_degree(self) -> int:
        # exp(ln 400 / 2) lands just under 20
        return int(math.floor(math.exp(self.alpha / self.beta) + 1e-9))

    @model_validator(mode="after")
    def validate_max_degree(self):
        if self.max_degree < 1:
            raise ValueError("alpha/beta give a maximum degree below 1")
        return self

    def expected_count(self, x: int) -> int:
        """Target number of degree-x vertices, rounded to nearest."""
        return int(math.floor(math.exp(self.alpha) / x**self.beta + 0.5))


class OpMix(BaseModel):
    """Sampling weights over the four op kinds (normalized on use)."""

    add_vertex: float = Field(default=0.1, ge=0)
    remove_vertex: float = Field(default=0.1, ge=0)
    add_edge: float = Field(default=0.4, ge=0)
    remove_edge: float = Field(default=0.4, ge=0)

    @model_validator(mode="after")
    def validate_total(self):
        if self.total <= 0:
            raise ValueError("op mix must give at least one kind a positive weight")
        return self

    @property
    def total(self) -> float:
        return self.add_vertex + self.remove_vertex + self.add_edge + self.remove_edge

    @classmethod
    def parse(cls, text: str) -> "OpMix":
        """Parse "av,rv,ae,re" weights, e.g. "0,0,0.5,0.5"."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("op mix needs four comma-separated weights: av,rv,ae,re")
        av, rv, ae, re_ = (float(p) for p in parts)
        return cls(add_vertex=av, remove_vertex=rv, add_edge=ae, remove_edge=re_)


# Run Schemas
class RunConfig(BaseModel):
    """Everything `run` needs to replay a stream through one engine."""

    engine: EngineName = EngineName.ONESWAP
    graph_path: Optional[str] = None
    ops_path: Optional[str] = None
    gen_ops: int = Field(default=0, ge=0, description="Generate this many ops if no ops file")
    mix: OpMix = Field(default_factory=OpMix)
    init: InitPolicy = InitPolicy.GREEDY
    init_path: Optional[str] = None
    check_every: int = Field(default=0, ge=0)
    strict: bool = True
    seed: int = Field(default=0, ge=0)
    repeat: int = Field(default=1, ge=1)
    csv_out: Optional[str] = None
    plr: Optional[PlrParams] = Field(
        default=None, description="PLR parameters the input graph was drawn from"
    )

    @model_validator(mode="after")
    def validate_sources(self):
        if self.init is InitPolicy.FILE and not self.init_path:
            raise ValueError("init policy 'file' requires an initial IS file")
        return self


class MetricsRecord(BaseModel):
    """One CSV row per replayed op."""

    step: int
    op: str
    is_size: int
    swaps: int
    elapsed_ns: int
    checks: Optional[bool] = None

    def csv_fields(self) -> List[object]:
        """Cells in CSV_COLUMNS order; checks render as "", "ok" or "fail"."""
        checks = "" if self.checks is None else ("ok" if self.checks else "fail")
        return [self.step, self.op, self.is_size, self.swaps, self.elapsed_ns, checks]


CSV_COLUMNS = ["step", "op", "is_size", "swaps", "elapsed_ns", "checks"]
CSV_HEADER = ",".join(CSV_COLUMNS)


class RunSummary(BaseModel):
    """Aggregates written after the per-op rows."""

    steps: int
    total_swaps: int
    final_is_size: int
    mean_latency_ns: float
    p50_latency_ns: float
    p99_latency_ns: float
    mean_total_ns: float
    skipped: int = 0
    initial_swaps: int = Field(default=0, description="Swaps fired draining the initial set")
    peak_candidates: Dict[int, int] = Field(default_factory=dict)
    plr_expected_ratio: Optional[float] = None


# Oracle Schemas
class SwapWitness(BaseModel):
    """A j-swap: exchanging `swap_out` (j vertices of M) for the larger independent `swap_in`."""

    model_config = ConfigDict(frozen=True)

    level: int = Field(..., ge=1)
    swap_out: List[int]
    swap_in: List[int]

    @field_validator("swap_in")
    def validate_gain(cls, value, info):
        out = info.data.get("swap_out", [])
        if len(value) <= len(out):
            raise ValueError("a swap must bring in more vertices than it removes")
        return value


class GapReport(BaseModel):
    """Distance of a maintained set to the independence number."""

    alpha: int
    is_size: int
    gap: int
    gamma: float


class PartitionProfile(BaseModel):
    """M and the count-partition of its complement."""

    n: int
    is_size: int
    by_count: Dict[int, int] = Field(default_factory=dict)
    is_degree_sum: int
    max_degree: int
    region_is_side: int = 0
    region_candidate_side: int = 0

    @property
    def weighted_count_sum(self) -> int:
        return sum(i * c for i, c in self.by_count.items())

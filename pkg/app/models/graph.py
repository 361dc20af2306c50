"""
Mutable undirected simple graph and the four update operations applied to it.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, Set, Tuple

from app.exceptions import (
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
)


class OpKind(str, Enum):
    """Update kinds; values are the op-stream mnemonics."""

    ADD_VERTEX = "av"
    REMOVE_VERTEX = "rv"
    ADD_EDGE = "ae"
    REMOVE_EDGE = "re"


@dataclass(frozen=True, slots=True)
class UpdateOp:
    """
    One update. Vertex ops use `u` only; AddVertex carries its full
    neighbor list up front.
    """

    kind: OpKind
    u: int
    v: int = -1
    nbrs: Tuple[int, ...] = ()

    @classmethod
    def add_vertex(cls, v: int, nbrs: Iterable[int] = ()) -> "UpdateOp":
        return cls(OpKind.ADD_VERTEX, v, nbrs=tuple(nbrs))

    @classmethod
    def remove_vertex(cls, v: int) -> "UpdateOp":
        return cls(OpKind.REMOVE_VERTEX, v)

    @classmethod
    def add_edge(cls, u: int, v: int) -> "UpdateOp":
        return cls(OpKind.ADD_EDGE, u, v)

    @classmethod
    def remove_edge(cls, u: int, v: int) -> "UpdateOp":
        return cls(OpKind.REMOVE_EDGE, u, v)

    def inverse(self, g: "DynamicGraph") -> "UpdateOp":
        """The op undoing this one; `g` is the graph before this op is applied."""
        if self.kind is OpKind.ADD_VERTEX:
            return UpdateOp.remove_vertex(self.u)
        if self.kind is OpKind.REMOVE_VERTEX:
            return UpdateOp.add_vertex(self.u, sorted(g.adj[self.u]))
        if self.kind is OpKind.ADD_EDGE:
            return UpdateOp.remove_edge(self.u, self.v)
        return UpdateOp.add_edge(self.u, self.v)

    def __str__(self) -> str:
        if self.kind is OpKind.ADD_VERTEX:
            return " ".join(
                ["av", str(self.u), str(len(self.nbrs))] + [str(n) for n in self.nbrs]
            )
        if self.kind is OpKind.REMOVE_VERTEX:
            return f"rv {self.u}"
        return f"{self.kind.value} {self.u} {self.v}"


class DynamicGraph:
    """
    Undirected simple graph over sparse integer ids.

    Adjacency is a dict of sets, so edge membership is O(1) expected.
    """

    __slots__ = ("adj", "m")

    def __init__(self) -> None:
        self.adj: Dict[int, Set[int]] = {}
        self.m = 0

    @classmethod
    def from_edges(
        cls, edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()
    ) -> "DynamicGraph":
        g = cls()
        for v in vertices:
            if v not in g.adj:
                g.add_vertex(v)
        for u, v in edges:
            for w in (u, v):
                if w not in g.adj:
                    g.add_vertex(w)
            g.add_edge(u, v)
        return g

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def vertices(self) -> Set[int]:
        return set(self.adj)

    def __contains__(self, v: int) -> bool:
        return v in self.adj

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj.get(u)
        return nbrs is not None and v in nbrs

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Each edge once as (smaller, larger), in ascending order."""
        for u in sorted(self.adj):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph()
        g.adj = {v: set(s) for v, s in self.adj.items()}
        g.m = self.m
        return g

    # Validation

    def check(self, op: UpdateOp) -> None:
        """Raise the strict-mode error for `op`, or return if it is valid."""
        if op.kind is OpKind.ADD_VERTEX:
            if op.u in self.adj:
                raise DuplicateVertex(f"vertex {op.u} already exists")
            seen = set()
            for w in op.nbrs:
                if w == op.u:
                    raise SelfLoop(f"vertex {op.u} lists itself as a neighbor")
                if w not in self.adj:
                    raise UnknownVertex(f"neighbor {w} of new vertex {op.u} does not exist")
                if w in seen:
                    raise DuplicateEdge(f"neighbor {w} listed twice for vertex {op.u}")
                seen.add(w)
        elif op.kind is OpKind.REMOVE_VERTEX:
            if op.u not in self.adj:
                raise UnknownVertex(f"vertex {op.u} does not exist")
        else:
            if op.u == op.v:
                raise SelfLoop(f"self-loop on vertex {op.u}")
            for w in (op.u, op.v):
                if w not in self.adj:
                    raise UnknownVertex(f"vertex {w} does not exist")
            present = op.v in self.adj[op.u]
            if op.kind is OpKind.ADD_EDGE and present:
                raise DuplicateEdge(f"edge ({op.u}, {op.v}) already exists")
            if op.kind is OpKind.REMOVE_EDGE and not present:
                raise UnknownEdge(f"edge ({op.u}, {op.v}) does not exist")

    # Mutation (callers validate first)

    def add_vertex(self, v: int, nbrs: Iterable[int] = ()) -> None:
        if v in self.adj:
            raise DuplicateVertex(f"vertex {v} already exists")
        self.adj[v] = set()
        for w in nbrs:
            self.add_edge(v, w)

    def remove_vertex(self, v: int) -> None:
        nbrs = self.adj.pop(v)
        for w in nbrs:
            self.adj[w].discard(v)
        self.m -= len(nbrs)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}")
        if v in self.adj[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) already exists")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].remove(v)
        self.adj[v].remove(u)
        self.m -= 1

    def __repr__(self) -> str:
        return f"<DynamicGraph(n={self.n}, m={self.m})>"


def apply_op(g: DynamicGraph, op: UpdateOp, strict: bool = True) -> bool:
    """
    Apply an update to the graph.

    Args:
        g: Graph to mutate
        op: Update operation
        strict: Raise on invalid operands; otherwise skip the op

    Returns:
        True if the op was applied, False if it was skipped (lenient mode)

    Raises:
        GraphError: If the op is invalid and strict is set
    """
    try:
        g.check(op)
    except GraphError:
        if strict:
            raise
        return False

    if op.kind is OpKind.ADD_VERTEX:
        g.add_vertex(op.u, op.nbrs)
    elif op.kind is OpKind.REMOVE_VERTEX:
        g.remove_vertex(op.u)
    elif op.kind is OpKind.ADD_EDGE:
        g.add_edge(op.u, op.v)
    else:
        g.remove_edge(op.u, op.v)
    return True

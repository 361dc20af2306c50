"""
Text formats for base graphs, op streams and independent sets.

Graph file: optional "v <id>" lines declaring (isolated) vertices, then
"u v" edge lines. Op stream: "av <v> <k> <n1> .. <nk>", "rv <v>",
"ae <u> <v>", "re <u> <v>". IS file: vertex ids, any whitespace.
'#' starts a comment line in all three.
"""

import logging
from typing import Iterable, Iterator, List, Set, TextIO, Tuple, Union

from app.exceptions import DuplicateEdge, ParseError, SelfLoop
from app.models.graph import DynamicGraph, OpKind, UpdateOp

logger = logging.getLogger(__name__)

Source = Union[str, TextIO, Iterable[str]]


def _lines(source: Source) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, tokens) for every non-blank, non-comment line."""
    if isinstance(source, str):
        source = source.splitlines()
    for number, raw in enumerate(source, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        yield number, text.split()


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line=number) from None
    if any(v < 0 for v in values):
        raise ParseError("vertex ids must be non-negative", line=number)
    return values


def parse_graph(source: Source, strict: bool = True) -> DynamicGraph:
    """
    Read a graph file.

    Args:
        source: File text, an open file or an iterable of lines
        strict: Raise on a repeated edge line; otherwise keep the first

    Returns:
        The parsed graph

    Raises:
        ParseError: On a malformed line
        SelfLoop: On an edge "u u"
        DuplicateEdge: On a repeated edge in strict mode
    """
    g = DynamicGraph()
    for number, tokens in _lines(source):
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError("vertex line must be 'v <id>'", line=number)
            (v,) = _ints(tokens[1:], number)
            if v not in g.adj:
                g.add_vertex(v)
            continue
        if len(tokens) != 2:
            raise ParseError("edge line must be 'u v'", line=number)
        u, v = _ints(tokens, number)
        if u == v:
            raise SelfLoop(f"line {number}: self-loop on vertex {u}")
        for w in (u, v):
            if w not in g.adj:
                g.add_vertex(w)
        if g.has_edge(u, v):
            if strict:
                raise DuplicateEdge(f"line {number}: edge ({u}, {v}) listed twice")
            logger.warning("line %d: duplicate edge (%d, %d) ignored", number, u, v)
            continue
        g.add_edge(u, v)
    return g


def parse_ops(source: Source) -> List[UpdateOp]:
    """
    Read an op stream, one op per line.

    Raises:
        ParseError: On an unknown mnemonic, a wrong operand count or a
            neighbor count that disagrees with the list that follows
    """
    ops: List[UpdateOp] = []
    for number, tokens in _lines(source):
        try:
            kind = OpKind(tokens[0])
        except ValueError:
            raise ParseError(f"unknown op {tokens[0]!r}", line=number) from None
        args = _ints(tokens[1:], number)
        if kind is OpKind.ADD_VERTEX:
            if len(args) < 2 or len(args) != 2 + args[1]:
                raise ParseError("expected 'av <v> <k> <n1> .. <nk>'", line=number)
            ops.append(UpdateOp.add_vertex(args[0], args[2:]))
        elif kind is OpKind.REMOVE_VERTEX:
            if len(args) != 1:
                raise ParseError("expected 'rv <v>'", line=number)
            ops.append(UpdateOp.remove_vertex(args[0]))
        else:
            if len(args) != 2:
                raise ParseError(f"expected '{kind.value} <u> <v>'", line=number)
            ops.append(UpdateOp(kind, args[0], args[1]))
    return ops


def parse_is(source: Source) -> Set[int]:
    """Read an independent-set file."""
    members: Set[int] = set()
    for number, tokens in _lines(source):
        members.update(_ints(tokens, number))
    return members


def serialize_graph(g: DynamicGraph) -> str:
    """Graph file text; isolated vertices get a "v <id>" line."""
    out = [f"v {v}" for v in sorted(g.adj) if not g.adj[v]]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + ("\n" if out else "")


def serialize_ops(ops: Iterable[UpdateOp]) -> str:
    out = [str(op) for op in ops]
    return "\n".join(out) + ("\n" if out else "")


def serialize_is(members: Iterable[int]) -> str:
    out = [str(v) for v in sorted(members)]
    return "\n".join(out) + ("\n" if out else "")

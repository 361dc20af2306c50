"""
Error hierarchy shared by the services and the command line.
"""

from typing import Optional


class DynMISError(Exception):
    """Base error; `detail` is the user-facing message, `exit_code` the CLI status."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# Graph errors (strict mode)
class GraphError(DynMISError):
    exit_code = 4


class DuplicateVertex(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ParseError(DynMISError):
    """Malformed input line; `line` is 1-based."""

    exit_code = 3

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class InstanceTooLarge(DynMISError):
    exit_code = 6


class InfeasibleSequence(DynMISError):
    pass


class Exhausted(DynMISError):
    pass


class InvariantViolation(DynMISError):
    exit_code = 5

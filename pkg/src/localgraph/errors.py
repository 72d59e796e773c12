"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all graph-related errors."""


class UnknownVertexError(GraphError, KeyError):
    """A queried vertex does not exist in the graph."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex}")

    def __str__(self):
        return f"unknown vertex {self.vertex}"


class DuplicateEdgeError(GraphError, ValueError):
    """The same unordered vertex pair appears with conflicting weights."""


class ParseError(GraphError, ValueError):
    """A graph file could not be parsed.

    Carries the offending line number so callers can point at the input.
    """

    def __init__(self, path, line_no, reason):
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason
        where = f"{self.path}: line {line_no}" if line_no is not None else self.path
        super().__init__(f"{where}: {reason}")


class UnsortedNodeIdsError(ParseError):
    """AdjacencyList header IDs must be strictly increasing."""


class EigensolverError(GraphError, RuntimeError):
    """The sparse eigensolver failed to converge."""

"""Exception types shared across the package.

Errors split into two families: bad input (the caller can fix it) and
internal assertion failures (a bug somewhere upstream; never recover
silently).  The CLI maps the first family to exit code 1 and the second
to exit code 2.
"""


class BranchwiseError(Exception):
    """Base class for every error raised by this package."""


class OutOfRangeError(BranchwiseError):
    """A vertex id lies outside the graph's id range."""


class SelfLoopError(BranchwiseError):
    """An edge joins a vertex to itself."""


class DisconnectedGraphError(BranchwiseError):
    """The operation requires a connected graph."""


class ParseError(BranchwiseError):
    """A graph file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedTreeError(BranchwiseError):
    """A parse tree violates a structural invariant."""


class InconsistentBoundsError(BranchwiseError):
    """A load program asks a module for more inflow than it can absorb."""


class TooFewVerticesError(BranchwiseError):
    """A cover cannot be cut into the requested number of pieces."""


class TooLargeError(BranchwiseError):
    """The instance exceeds the brute-force size cap."""


class UnreachableError(BranchwiseError):
    """The support digraph does not reach every module from the root."""


# ----- internal assertion failures: abort loudly, never mask -----

class SearchBudgetExceededError(BranchwiseError):
    """The feasibility search ran out of nodes; the answer is unknown."""


class NoCoverError(BranchwiseError):
    """Internal: the cover search exhausted every size without an answer."""


class StuckExplorationError(BranchwiseError):
    """Internal: tree construction found no module eligible to continue."""


class NoAdoptableEndpointError(BranchwiseError):
    """Internal: a vertex owes an adoption but no endpoint is available."""


INPUT_ERRORS = (
    OutOfRangeError,
    SelfLoopError,
    DisconnectedGraphError,
    ParseError,
    InconsistentBoundsError,
    TooFewVerticesError,
    TooLargeError,
    UnreachableError,
)

INTERNAL_ERRORS = (
    SearchBudgetExceededError,
    NoCoverError,
    StuckExplorationError,
    NoAdoptableEndpointError,
    MalformedTreeError,
)

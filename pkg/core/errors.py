from typing import Iterable, Optional, Tuple


class AssemblyError(Exception):
    """Base class for every error raised by the assembly toolkit."""


class InvalidHypergraph(AssemblyError):
    """The assembly hypergraph breaks one of its structural invariants."""


class UndeclaredVertex(InvalidHypergraph):
    pass


class BadMultiplicity(InvalidHypergraph):
    pass


class BadOrder(InvalidHypergraph):
    pass


class OrderedAdjacency(InvalidHypergraph):
    pass


class DegenerateEdge(InvalidHypergraph):
    pass


class PreconditionViolated(AssemblyError):
    """An engine was called on an instance outside the shape it decides."""

    def __init__(self, reasons: Iterable[str]):
        self.reasons: Tuple[str, ...] = tuple(reasons)
        super().__init__("; ".join(self.reasons) or "precondition violated")


class AmbiguousChain(AssemblyError):
    """A neighbour choice cannot realize an edge; the choice is skipped."""


class CapExceeded(AssemblyError):
    """The exhaustive oracle refuses instances above its configured cap."""


class FormatError(AssemblyError):
    """Text input could not be read; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source or '<input>'}:{line}:{column}"
        super().__init__(f"{where}: {message}")


class FormatSyntaxError(FormatError):
    pass


class DuplicateVertex(FormatError):
    pass


class UnknownVertex(FormatError):
    pass


class WitnessRejected(AssemblyError):
    """An engine produced a witness that fails the compatibility check."""

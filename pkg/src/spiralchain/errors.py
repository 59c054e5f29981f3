"""Exception hierarchy shared by every module."""


class SpiralChainError(Exception):
    """Base class for all package errors."""


class GraphError(SpiralChainError, ValueError):
    """Input graph violates a structural requirement."""


class NotCubic(GraphError):
    pass


class HasLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class HasBridge(GraphError):
    pass


class NotGenusZero(GraphError):
    pass


class BadRotation(GraphError):
    pass


class ReductionError(SpiralChainError):
    """A triangle reduction was requested outside its supported case."""


class NeighborsNotDistinct(ReductionError):
    pass


class V5EqualsV6(ReductionError):
    pass


class NotATriangle(ReductionError):
    pass


class ColoringError(SpiralChainError):
    pass


class ImproperInput(ColoringError, ValueError):
    """A coloring handed to an operation is not proper."""


class PartialColoring(ColoringError, ValueError):
    pass


class SeedUncolored(ColoringError):
    pass


class SeedWrongColor(ColoringError):
    pass


class StepExhausted(ColoringError):
    """No legal color could be found for an edge after Kempe repair."""

    def __init__(self, vertex: int, edge: int):
        super().__init__(f"no legal color for edge {edge} at vertex {vertex}")
        self.vertex = vertex
        self.edge = edge


class Unsatisfiable(ColoringError):
    """The exhaustive solver proved the graph has no 3-edge-coloring."""


class NotHamiltonianCycle(ColoringError, ValueError):
    pass


class OddCycle(ColoringError, ValueError):
    pass


class BadDeclaration(SpiralChainError, ValueError):
    """A declared apex vertex or crossing set fails verification."""


class DocumentSyntaxError(SpiralChainError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line

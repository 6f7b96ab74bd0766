"""Exception types shared across the toolkit."""


class FourColorError(Exception):
    """Base class for every error raised by this package."""


class StructureError(FourColorError):
    """The graph data violates a structural invariant (symmetry, simplicity, ...)."""


class DisconnectedError(StructureError):
    """The graph is not connected."""


class EulerError(StructureError):
    """Traced faces violate the planar identity F + V = E + 2."""

    def __init__(self, message: str, genus_defect: int):
        super().__init__(f"{message} (genus defect {genus_defect})")
        self.genus_defect = genus_defect


class NonPlanarError(FourColorError):
    """No planar embedding exists; ``witness`` holds an obstructing subgraph when known."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class OperationError(FourColorError):
    """A precondition of the requested operation does not hold."""


class StuckError(FourColorError):
    """Reduction halted on a maximal planar graph with no degree-3 vertex."""

    def __init__(self, message: str, graph, degree_multiset):
        super().__init__(message)
        self.graph = graph
        self.degree_multiset = tuple(degree_multiset)


class RecordMismatchError(FourColorError):
    """A triangulation record does not match the graph it is applied to."""

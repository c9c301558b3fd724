class PreconditionError(ValueError):
    """An input violates a hypothesis the computation depends on."""


class NotSpanningError(PreconditionError):
    def __init__(self, rank: int, dim: int):
        super().__init__(f"X must span the ambient space: rank {rank} < dimension {dim}")


class NonAcuteError(PreconditionError):
    def __init__(self):
        super().__init__(
            "no linear functional is positive on every vector of X; pass a regular face instead"
        )


class NonGenericPointError(PreconditionError):
    pass


class InvariantError(RuntimeError):
    """A result contradicts a structural identity; this indicates a bug."""

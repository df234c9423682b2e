from typing import Optional


class SparseKronError(Exception):
    """Base class for every error raised by the sparsekron library."""


class NotPrime(SparseKronError, ValueError):
    def __init__(self, q: int):
        super().__init__(f"{q} is not prime")
        self.q = q


class RingTooSmall(SparseKronError, ValueError):
    pass


class RingMismatch(SparseKronError, ValueError):
    pass


class ArityMismatch(SparseKronError, ValueError):
    pass


class ParseError(SparseKronError, ValueError):
    def __init__(self, message: str, position: int, text: Optional[str] = None):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.text = text


class UnknownVariable(SparseKronError, ValueError):
    def __init__(self, name: str, position: int, n: int):
        super().__init__(
            f"unknown variable '{name}' at offset {position} "
            f"(expected x1..x{n})"
        )
        self.name = name
        self.position = position


class BackendFailure(SparseKronError):
    """A univariate backend found data inconsistent with its term bound."""


class SingularSystem(SparseKronError, ValueError):
    pass


class BoundsViolated(SparseKronError):
    """The black box does not respect the given term or degree bound."""


class PreconditionViolated(SparseKronError):
    pass

"""Exception types shared across the package."""


class LieDualError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(LieDualError):
    pass


class JacobiViolation(LieDualError):
    def __init__(self, triples):
        self.triples = list(triples)
        super().__init__(f"Jacobi identity fails on basis triples {self.triples[:5]}")


class NotAnIdeal(LieDualError):
    pass


class NotASubalgebra(LieDualError):
    pass


class NotACocycle(LieDualError):
    pass


class NotADerivation(LieDualError):
    pass


class InvalidData(LieDualError):
    """Double-extension ingredients failed validation."""


class DegenerateForm(LieDualError):
    pass


class DecompositionFailed(LieDualError):
    pass


class NotReductive(LieDualError):
    pass


class StructureInvalid(LieDualError):
    pass


class MissingFactorData(LieDualError):
    """Semisimple factor metadata is required but unavailable."""


class ScanBudgetExceeded(LieDualError):
    """An exact scan would need more sample points than the configured cap."""

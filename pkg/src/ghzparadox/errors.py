"""Exception hierarchy shared by all modules."""


class ValidationError(ValueError):
    """A matrix failed one of the density-matrix checks."""

    check = "validation"


class NotHermitian(ValidationError):
    check = "hermitian"


class TraceNotOne(ValidationError):
    check = "trace"

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


class NotPositiveSemiDefinite(ValidationError):
    check = "positive semi-definite"

    def __init__(self, message, min_eigenvalue):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class WeightsInvalid(ValueError):
    pass


class DomainError(ValueError):
    """An argument lies outside the admissible range of an operation."""


class ParseError(ValueError):
    """A state file could not be read into a matrix of the expected shape."""

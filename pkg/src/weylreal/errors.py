"""Exception hierarchy shared by every module."""


class WeylError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(WeylError, ValueError):
    """Rank mismatch between two lattice objects."""


class InvalidRankError(WeylError, ValueError):
    pass


class NotARootError(WeylError, ValueError):
    pass


class InvalidElementError(WeylError, ValueError):
    """A matrix or word does not define an element of W_n."""


class FieldDegeneracyError(WeylError, ArithmeticError):
    """The modulus of a number field turned out to be reducible."""


class NoLeadingEigenvectorError(WeylError):
    pass


class ClassificationError(WeylError):
    """A nodal component does not match any simply-laced Dynkin diagram."""


class InconsistentInputError(WeylError):
    pass


class NotQuadraticEssentialError(WeylError):
    pass


class InternalVerificationError(WeylError):
    """A postcondition that should hold by construction failed."""


class ParseError(WeylError, ValueError):
    """Malformed element text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

"""Exception types shared across the package."""


class NambuPoissonError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(NambuPoissonError, ValueError):
    pass


class NotInvertible(NambuPoissonError, ValueError):
    pass


class SymmetryViolation(NambuPoissonError, ValueError):
    pass


class FieldMismatch(NambuPoissonError, TypeError):
    pass


class AxiomViolation(NambuPoissonError):
    """A precondition that requires a structure to satisfy its axioms failed.

    ``report`` holds the :class:`~nambu_poisson.algebra.ViolationReport` that
    triggered the failure, when there is one.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class HypothesisFailed(NambuPoissonError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IndexOutOfRange(NambuPoissonError, IndexError):
    pass


class ParseError(NambuPoissonError, ValueError):
    def __init__(self, reason, line=None, column=None):
        self.reason = reason
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + reason)

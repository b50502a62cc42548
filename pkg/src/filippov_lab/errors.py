"""Exception types shared across the library."""


class FilippovError(Exception):
    """Base class for every error this package raises on purpose."""


class SingularMatrix(FilippovError):
    """Square matrix with zero determinant where a solve/inverse was required."""


class DimensionMismatch(FilippovError):
    """Operands have incompatible shapes."""


class PreconditionFailed(FilippovError):
    """A mathematical precondition of an operation does not hold.

    When the failure was established by a verifier, the offending
    report is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EndpointMismatch(FilippovError):
    """Sources/targets do not line up for a composition or comparison."""


class ChainMapError(FilippovError):
    """(phi0, phi1) fails to commute with the differentials."""


class ChainHomotopyError(FilippovError):
    """tau fails the chain-homotopy equations against its endpoints."""


class NotSkeletal(FilippovError):
    """d != 0 where a skeletal 2-term algebra was required."""


class NotStrict(FilippovError):
    """l5 != 0 where a strict 2-term algebra was required."""


class InvalidQuadruple(PreconditionFailed):
    """The (algebra, space, representation, cocycle) data is inconsistent."""


class InvalidCrossedModule(PreconditionFailed):
    """The (g, h, mu, alpha) data fails the crossed-module equations."""


class InvalidSymplectic(PreconditionFailed):
    """The bilinear form fails skewness, nondegeneracy or compatibility."""


class DegreeOverflow(FilippovError):
    """A graded wedge computation left the stored degree range {0, 1, 2}."""


class ParseError(FilippovError):
    """Definition-file text could not be turned into a domain object."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %s, column %s: %s" % (line, column, message)
        super().__init__(message)


class UnknownKind(ParseError):
    """Definition file declares a kind this tool does not know."""


class BadRational(ParseError):
    """A rational literal could not be parsed (e.g. zero denominator)."""

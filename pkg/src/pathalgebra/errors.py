"""Exception types shared across the package.

Two families matter to callers. *Domain* errors mean a well-formed
problem has no result in the chosen semiring (undefined closure, a
non-stabilizing iteration, a singular system); the CLI maps these to
exit code 1 and the HTTP service to status 422. Everything else is an
*input* error (malformed files, wrong shapes, out-of-domain values),
mapped to exit code 2 / status 400.
"""

from __future__ import annotations


class PathAlgebraError(Exception):
    """Base class for every error raised by this package."""


class DomainMismatch(PathAlgebraError):
    """A value is not an element of the semiring in force."""


class NotIdempotent(PathAlgebraError):
    """The canonical order was requested on a non-idempotent semiring."""


class ClosureUndefined(PathAlgebraError):
    """The closure x* does not exist for this element."""

    def __init__(self, message: str = "closure undefined", index: int | None = None):
        super().__init__(message)
        self.index = index


class NonStabilized(PathAlgebraError):
    """An iteration or series reached its cap without an exact fixed point."""

    def __init__(self, limit: int):
        super().__init__(f"no stable solution within {limit} iterations")
        self.limit = limit


class SingularMatrix(PathAlgebraError):
    """I - A is not invertible over the field."""


class DimensionMismatch(PathAlgebraError):
    """Operand shapes are incompatible."""


class NotSquare(PathAlgebraError):
    pass


class NotLowerTriangular(PathAlgebraError):
    pass


class NotUpperTriangular(PathAlgebraError):
    pass


class NotDiagonal(PathAlgebraError):
    pass


class NotSymmetric(PathAlgebraError):
    pass


class NotCommutative(PathAlgebraError):
    pass


class InvalidWeight(PathAlgebraError):
    """A graph weight is outside the domain of the selected problem."""


class ParseError(PathAlgebraError):
    """Malformed text input; carries a 1-based position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        base = super().__str__()
        if self.line is None:
            return base
        if self.column is None:
            return f"{base} (line {self.line})"
        return f"{base} (line {self.line}, column {self.column})"


class UnknownSemiring(ParseError):
    """The semiring token is not one of the accepted names."""


class ElementOutOfDomain(ParseError):
    """A literal parsed fine but is not an element of the declared semiring."""


class IndexOutOfRange(ParseError):
    """A node index lies outside 1..n."""


class RemoteServiceError(PathAlgebraError):
    """An error reported by a remote service instance."""

    def __init__(self, message: str, category: str):
        super().__init__(message)
        self.category = category


_DOMAIN_ERRORS = (ClosureUndefined, NonStabilized, SingularMatrix)


def error_category(exc: PathAlgebraError) -> str:
    """Classify an error as 'domain' (unsolvable instance) or 'input'."""
    if isinstance(exc, RemoteServiceError):
        return exc.category
    return "domain" if isinstance(exc, _DOMAIN_ERRORS) else "input"

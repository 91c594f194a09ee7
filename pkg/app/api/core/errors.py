"""
Domain errors raised by the algebra, model, calculus and integration layers.

Every error carries a machine-readable ``error_code`` so the HTTP exception
handlers and the CLI can report it in the standard error shape.
"""

from typing import Dict, List, Optional


class RikitakeError(Exception):
    """
    Base class for all engine errors.

    Attributes:
        error_code (str): Upper-snake machine-readable code.
        message (str): Human-readable description.
        field (str): Key used when rendering ``errors``.

    Examples:
        >>> try:
        >>>     raise ParameterDomainError("beta must be nonzero", field="beta")
        >>> except RikitakeError as exc:
        >>>     print(exc.error_code)
        'PARAMETER_DOMAIN'
    """

    error_code = "ERROR"

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.field = field or "detail"

    def to_errors(self) -> Dict[str, List[str]]:
        """Render as the ``{field: [messages]}`` block of an error payload."""
        return {self.field: [self.message]}


class RingMismatchError(RikitakeError):
    error_code = "RING_MISMATCH"


class UnknownVariableError(RikitakeError):
    error_code = "UNKNOWN_VARIABLE"


class ArityMismatchError(RikitakeError):
    error_code = "ARITY_MISMATCH"


class MissingImageError(RikitakeError):
    error_code = "MISSING_IMAGE"


class ZeroDivisionAlgebraError(RikitakeError):
    error_code = "DIVISION_BY_ZERO"


class NonPolynomialError(RikitakeError):
    error_code = "NON_POLYNOMIAL"


class ParameterDomainError(RikitakeError):
    error_code = "PARAMETER_DOMAIN"


class ConvergenceError(RikitakeError):
    error_code = "MIDPOINT_NOT_CONVERGED"


class ParseError(RikitakeError):
    """
    Base for expression parse failures.

    Attributes:
        position (int): Zero-based character offset of the offending token.
    """

    error_code = "PARSE_ERROR"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}", field="expression")
        self.position = position


class ExprSyntaxError(ParseError):
    error_code = "SYNTAX_ERROR"


class UnknownIdentifierError(ParseError):
    error_code = "UNKNOWN_IDENTIFIER"


class InvalidExponentError(ParseError):
    error_code = "INVALID_EXPONENT"


class CertificateError(RikitakeError):
    """A build-time identity that must hold exactly did not."""

    error_code = "CERTIFICATE_FAILED"

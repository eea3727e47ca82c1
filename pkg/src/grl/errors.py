"""Errors raised when table-defined structures fail their defining axioms."""

from __future__ import annotations


class ValidationError(Exception):
    """Base class for structure validation failures.

    ``code`` is a stable machine-readable name used in CLI diagnostics;
    ``context`` carries the first violating tuple found by the ascending scan.
    """

    code = "Validation"

    def __init__(self, message: str, context: tuple = ()):
        super().__init__(message)
        self.context = tuple(context)


class OutOfRangeError(ValidationError):
    code = "OutOfRange"


class NotAssociativeError(ValidationError):
    code = "NotAssociative"


class AdditiveGroupError(ValidationError):
    code = "AdditiveGroup"


class DistributivityError(ValidationError):
    code = "Distributivity"


class NotComposableClosedError(ValidationError):
    code = "NotComposableClosed"


class IdentityViolationError(ValidationError):
    code = "IdentityViolation"


class InverseViolationError(ValidationError):
    code = "InverseViolation"


class BilinearityError(ValidationError):
    code = "BilinearityViolation"


class GradedAssociativityError(ValidationError):
    code = "AssociativityViolation"


class CodomainError(ValidationError):
    code = "CodomainViolation"


class NonComposableProductError(ValidationError):
    code = "NonComposableProductPresent"


class NotAnIdealError(ValidationError):
    code = "NotAnIdeal"


class NotGoodError(ValidationError):
    code = "NotGood"


class OppositeDegreeError(ValidationError):
    code = "OppositeDegreeViolation"


class DiagonalNotIdempotentError(ValidationError):
    code = "DiagonalNotIdempotent"


class IncompatibleDegreesError(ValidationError):
    code = "IncompatibleDegrees"

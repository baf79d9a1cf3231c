"""Exception types shared across the package."""


class LambdaKitError(Exception):
    """Base class for all lambdakit errors."""


class InvalidParameterError(LambdaKitError, ValueError):
    """A parameter is outside its documented domain."""


class MatrixParseError(LambdaKitError, ValueError):
    """Input text is not a well-formed square bit matrix."""


class NotLambdaError(LambdaKitError, ValueError):
    """The matrix does not have exactly k ones in every row and column."""


class NotInPlusSetError(LambdaKitError, ValueError):
    """The matrix has a 0 in the bottom-right corner where a 1 is required."""


class InconsistentInputError(LambdaKitError, ValueError):
    """A claimed count fails an exact divisibility relation it must satisfy."""

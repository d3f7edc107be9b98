class EinsteinCheckError(Exception):
    """Base class for all EinsteinCheck exceptions."""
    def __init__(self, message=None):
        super().__init__(message or "EinsteinCheck: computation failed.")


class EinsteinCheckWarning(Warning):
    """Warning message for EinsteinCheck reproduction checks."""
    def __init__(self, message=None):
        super().__init__(message or "EinsteinCheck: some reproduction checks failed.")


class EinsteinCheckInfo:
    """Informational message for EinsteinCheck reproduction checks."""
    def __init__(self, message=None):
        self.message = message or "EinsteinCheck: all reproduction checks passed."

    def __str__(self):
        return self.message


class ConfigurationError(EinsteinCheckError):
    """Raised when configuration is invalid or cannot be read."""
    pass


class SelectorError(EinsteinCheckError):
    """Raised when a group selector cannot be resolved."""
    pass


class NotTwoSummandsError(EinsteinCheckError):
    """Raised when the painted node does not give exactly two isotropy summands."""
    pass


class NegativeEntryError(EinsteinCheckError):
    """Raised when a closed-form structure constant evaluates negative."""
    pass


class ZeroParameterError(EinsteinCheckError):
    """Raised when a metric parameter is zero."""
    pass


class InvalidMetricError(EinsteinCheckError):
    """Raised when a metric parameter is negative or a block is missing."""
    pass


class DegenerateDenominatorError(EinsteinCheckError):
    """Raised when an elimination denominator vanishes."""
    pass


class ZeroDivisionPolyError(EinsteinCheckError):
    """Raised on division by the zero polynomial."""
    pass


class IntervalError(EinsteinCheckError):
    """Raised when an interval operation is undefined (division by an interval containing 0)."""
    pass


class IndeterminateError(EinsteinCheckError):
    """Raised when a sign or equality cannot be decided at maximal refinement."""
    pass


class EliminationError(EinsteinCheckError):
    """Raised when an algebraic identity the elimination relies on does not hold."""
    pass

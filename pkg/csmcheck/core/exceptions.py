"""
Custom exception classes for the application.
These are used across different modules for consistent error handling.
"""

class BaseAppException(Exception):
    """Base class for all application exceptions"""
    pass


class ModelMismatchError(BaseAppException):
    """Raised when two classes or tables live in different ring models"""
    pass


class NonUnitError(BaseAppException):
    """Raised when a class to be inverted has leading coefficient other than +1/-1"""
    pass


class ContainmentError(BaseAppException):
    """Raised when a partition does not fit in the required rectangle"""
    pass


class RangeError(BaseAppException):
    """Raised when an integer parameter is outside its admissible range"""
    pass


class MissingClassMapError(BaseAppException):
    """Raised when a class computation needs Chern-Mather data that is absent"""
    pass


class DimensionShiftError(BaseAppException):
    """Raised when a stratified map does not shift dimensions as declared"""
    pass


class InputValidationError(BaseAppException):
    """Raised when user input (files, arguments) fails validation"""
    pass


class FixtureError(BaseAppException):
    """Raised when an embedded fixture is missing or inconsistent"""
    pass


class CalibrationError(BaseAppException):
    """Raised when a printed table admits no unique orientation"""
    pass


class InvariantViolationError(BaseAppException):
    """Raised when a mathematical invariant that must always hold fails"""
    pass

"""
Exception hierarchy shared by every module of the toolkit
"""
from typing import Any, Optional


class GraphValidationError(ValueError):
    """
    An input violates a structural invariant (self-loop, vertex out of range,
    invalid cover or minor model, non-chordal host where a chordal one is needed)

    Args:
        message: Human readable description
        certificate: Optional witness of the violation (e.g. a chordless cycle)
    """

    def __init__(self, message: str, certificate: Optional[Any] = None):
        super().__init__(message)
        self.certificate = certificate


class GraphParseError(GraphValidationError):
    """Malformed graph text; `line_number` is 1-based"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DegenerateInputError(GraphValidationError):
    """The input is valid but too small for the requested construction"""


class CapacityError(RuntimeError):
    """
    An exact search was asked to run past its configured cap

    Args:
        operation: Name of the exact routine
        size: Size of the offending instance
        cap: The configured limit
    """

    def __init__(self, operation: str, size: int, cap: int):
        super().__init__(f"{operation}: instance size {size} exceeds exact-search cap {cap}")
        self.operation = operation
        self.size = size
        self.cap = cap

"""Custom exceptions for the rainbowsat library.

This module defines the exception hierarchy used throughout the library
for clear and specific error handling.
"""

from typing import Any


class RainbowSatError(Exception):
    """Base exception for all rainbowsat errors.

    All custom exceptions in the rainbowsat library inherit from this base class,
    allowing users to catch all library-specific errors with a single except clause.
    """

    pass


class ParameterError(RainbowSatError):
    """Raised when construction or search parameters violate a named constraint.

    Attributes:
        constraint: Short human readable statement of the violated constraint

    Examples:
        - default_partition(14): no valid 4-partition exists
        - Omega partition containing a part of size 4
        - Search task asking for all colorings with n = 9
    """

    def __init__(self, message: str, constraint: str | None = None):
        """Initialize ParameterError.

        Args:
            message: Error message
            constraint: Optional violated constraint, defaults to the message
        """
        super().__init__(message)
        self.constraint = constraint or message


class RejectedInputError(RainbowSatError):
    """Raised when an operation is called outside of its domain.

    The input is well formed but the question asked about it is not one the
    library answers, such as asking for saturation with n < r on a
    non-complete graph.

    Attributes:
        rainbow_copy: Optional cycle witness that caused the rejection

    Examples:
        - enumerate_paths with u == v
        - is_rainbow_saturated on a 4-vertex path with r = 5
        - check_sufficiency_disjoint_paths on a coloring with a rainbow C_r
    """

    def __init__(self, message: str, rainbow_copy: Any = None):
        """Initialize RejectedInputError.

        Args:
            message: Error message
            rainbow_copy: Optional witness explaining the rejection
        """
        super().__init__(message)
        self.rainbow_copy = rainbow_copy


class ParseError(RainbowSatError):
    """Raised when a graph6, coloring or witness document cannot be parsed.

    Attributes:
        offset: Byte offset for graph6 input, if known
        line: 1-based line number for text formats, if known

    Examples:
        - graph6 byte outside the printable range at offset 3
        - coloring line "0 1" missing its color
        - witness file with a path before any nonedge line
    """

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        """Initialize ParseError.

        Args:
            message: Error message
            offset: Optional byte offset of the failure
            line: Optional line number of the failure
        """
        if line is not None:
            message = f"line {line}: {message}"
        elif offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)
        self.offset = offset
        self.line = line


class BudgetExceededError(RainbowSatError):
    """Raised when a computation would exceed its configured budget.

    Attributes:
        required: Size of the budget the computation would need

    Examples:
        - enumerate_colorings on a graph with 13 edges (Bell(13) colorings)
    """

    def __init__(self, message: str, required: int | None = None):
        """Initialize BudgetExceededError.

        Args:
            message: Error message
            required: Optional budget the computation would need
        """
        super().__init__(message)
        self.required = required

"""Exception hierarchy.

Split by who is at fault: bad input (parse/validation), resource limits
(pair budget), and bad luck (genericity retries exhausted).  The CLI maps
input errors to exit code 2 and budget/genericity errors to exit code 3.
"""


class CharclassError(Exception):
    """Base class for all package errors."""


class ParseError(CharclassError):
    """Syntax error in an ideal description; carries line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InputError(CharclassError):
    """Semantically invalid input: non-homogeneous generator, zero ideal,
    duplicate variables, mismatched ambient spaces, bad prime, and so on."""


class BudgetExceededError(CharclassError):
    """Groebner pair budget exhausted before the basis stabilized."""


class NotZeroDimensionalError(CharclassError):
    """A solution count was requested for a system whose staircase is not
    finite.  Internal signal; the degree engine retries with fresh draws."""


class GenericityError(CharclassError):
    """Random choices failed to certify a value: retries exhausted or
    independent trials disagreed.  Rerun with a different seed, more
    retries, or a larger prime."""

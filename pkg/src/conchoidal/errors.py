"""Exception hierarchy.

Every error carries a short machine-readable ``code`` which the command line
front end maps to a distinct exit status.
"""


class ConchoidalError(Exception):
    code = "error"
    exit_status = 1


class DivisionByZero(ConchoidalError, ZeroDivisionError):
    code = "division_by_zero"
    exit_status = 3


class IncompatibleTowers(ConchoidalError):
    code = "incompatible_towers"
    exit_status = 4


class NotASquare(ConchoidalError, ValueError):
    code = "not_a_square"
    exit_status = 5


class ExtensionLimitExceeded(ConchoidalError):
    code = "extension_limit_exceeded"
    exit_status = 6


class IdenticallyUndefined(ConchoidalError, ValueError):
    code = "identically_undefined"
    exit_status = 7


class DegenerateImage(ConchoidalError, ValueError):
    code = "degenerate_image"
    exit_status = 8


class NotProper(ConchoidalError, ValueError):
    code = "not_proper"
    exit_status = 9


class ExcludedCurve(ConchoidalError, ValueError):
    code = "excluded_curve"
    exit_status = 10


class LinearInX2(ConchoidalError, ValueError):
    code = "linear_in_x2"
    exit_status = 11


class GenusPositive(ConchoidalError, ValueError):
    code = "genus_positive"
    exit_status = 12


class ExprSyntaxError(ConchoidalError, ValueError):
    """Malformed expression; ``pos`` is the 0-based offset of the offending token."""

    code = "syntax_error"
    exit_status = 13

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class NonConstantWhereConstantRequired(ConchoidalError, ValueError):
    code = "non_constant"
    exit_status = 14


class InternalCheckFailed(ConchoidalError, AssertionError):
    code = "internal_check_failed"
    exit_status = 15

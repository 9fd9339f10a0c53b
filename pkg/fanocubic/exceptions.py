"""
Exceptions
~~~~~~~~~~

Every error carries the process exit code the command line front end
reports for it.

"""
from typing import Any

from .constants import ExitCode


class FanoCubicError(Exception):
    """
    Base of all errors raised by this package.
    """
    exit_code = ExitCode.InvalidInput


class ImmediateExit(FanoCubicError):
    """
    Stop processing and emit the attached report.
    """
    def __init__(self, report: Any, exit_code: ExitCode=ExitCode.Success) -> None:
        super().__init__(report)
        self.report = report
        self.exit_code = exit_code


class VerificationFailed(ImmediateExit):
    """
    A relation did not hold; the report records both sides.
    """
    def __init__(self, report: Any) -> None:
        super().__init__(report, ExitCode.VerificationFailed)


class InvalidInput(FanoCubicError, ValueError):
    """
    Input rejected before or during evaluation.
    """


class InvalidField(InvalidInput):
    """
    Field parameters do not describe a supported finite field.
    """


class InvalidCubic(InvalidInput):
    """
    Form is not a valid cubic (wrong degree, zero, malformed input).
    """


class NonReducedCubic(InvalidCubic):
    """
    Cubic is divisible by the square of a linear form.
    """


class ClassParseError(InvalidInput):
    """
    Text could not be parsed as a virtual class.
    """
    def __init__(self, message: str, text: str=None, position: int=None) -> None:
        if text is not None and position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position


class UnsupportedOrder(InvalidInput):
    """
    Truncation order outside of what is implemented.
    """


class ScanTooLarge(InvalidInput):
    """
    A brute-force scan would visit more points or lines than supported.
    """


class NegativeLefschetzPower(InvalidInput):
    """
    Class has a term with a negative power of L where none is allowed.
    """


class UnassignedSymbol(InvalidInput, KeyError):
    """
    Realization met a symbol with no value in the environment.
    """
    def __init__(self, symbol: Any) -> None:
        super().__init__(f"No value assigned to symbol `{symbol}`")
        self.symbol = symbol

    def __str__(self):
        return self.args[0]


class NonIntegralResult(InvalidInput, ArithmeticError):
    """
    An exact division that must land in the integers did not.
    """
    def __init__(self, what: str, value: Any) -> None:
        super().__init__(f"{what} is not integral: {value}")
        self.what = what
        self.value = value

"""Exception hierarchy shared by every module in :mod:`genfun`."""


class GenfunError(Exception):
    """Base class for all errors raised by this package."""


class DescriptorMismatch(GenfunError, TypeError):
    """Operands live in different coefficient rings."""


class DivisionByZeroPoly(GenfunError, ZeroDivisionError):
    pass


class NonConstantCoefficient(GenfunError, ValueError):
    """An operator coefficient is outside the constant subring."""


class NonzeroConstantInExponent(GenfunError, ValueError):
    pass


class OutOfValidRange(GenfunError, IndexError):
    pass


class NegativeTailNonzero(GenfunError, ValueError):
    pass


class EmptyValidRange(GenfunError, ValueError):
    """Truncation leaves no exponent where the result can be trusted."""


class InsufficientSequenceLength(GenfunError, IndexError):
    pass


class WeightDenominatorVanishes(GenfunError, ValueError):
    pass


class NotOrthogonal(GenfunError, ValueError):
    pass


class UnknownExample(GenfunError, KeyError):
    pass


class RecurrenceUnderdetermined(GenfunError, ValueError):
    pass


class RecurrenceInconsistent(GenfunError, ValueError):
    """Two recurrence routes produced different values for the same term."""


class ParseError(GenfunError, ValueError):
    """Malformed expression text.

    ``position`` is the 0-based character offset where parsing stopped.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)

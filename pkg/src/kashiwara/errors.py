"""Exception hierarchy shared by every module of the package."""


class KashiwaraError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(KashiwaraError, ZeroDivisionError):
    pass


class PoleAtPoint(KashiwaraError, ValueError):
    """A scalar was evaluated at a point where its denominator vanishes."""


class FractionalExponent(KashiwaraError, ValueError):
    """An exponent of r or s would have to be a non-integer."""


class BadIndex(KashiwaraError, IndexError):
    pass


class IllegalLetter(KashiwaraError, ValueError):
    """A generator was used in an algebra (or map) that does not contain it."""


class IncompatibleParents(KashiwaraError, TypeError):
    pass


class HeightExceeded(KashiwaraError, ValueError):
    """A weight beyond the configured truncation height was requested."""


class DepthExceeded(KashiwaraError, ValueError):
    """A module computation would leave the realized depth window."""


class SingularGram(KashiwaraError, ArithmeticError):
    pass


class WrongType(KashiwaraError, ValueError):
    """An operation restricted to one Cartan type was called on another."""


class ConfigError(KashiwaraError, ValueError):
    pass


class DSLSyntaxError(KashiwaraError, SyntaxError):
    """Malformed expression text; ``column`` is 1-based."""

    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column

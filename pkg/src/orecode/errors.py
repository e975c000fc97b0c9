"""Exception hierarchy shared by every orecode module."""


class OrecodeError(Exception):
    """Base class for all library errors."""


class DivisionByZero(OrecodeError, ZeroDivisionError):
    pass


class SpecMismatch(OrecodeError, ValueError):
    """Operands live in different fields."""


class RingTagMismatch(OrecodeError, ValueError):
    """Skew polynomials from different (field, automorphism, derivation) rings."""


class ZeroDivisor(OrecodeError, ZeroDivisionError):
    """Division by the zero polynomial."""


class NotAFactor(OrecodeError, ValueError):
    """A generator does not divide x^n - 1 on the required side."""

    def __init__(self, message, component=None, remainder=None):
        super().__init__(message)
        self.component = component
        self.remainder = remainder


class NotACode(OrecodeError, ValueError):
    """Degenerate generator, e.g. one that yields the zero code."""


class ZeroCode(OrecodeError, ValueError):
    pass


class BudgetExceeded(OrecodeError, RuntimeError):
    pass


class Inconclusive(OrecodeError, RuntimeError):
    """Column search exhausted w_max without finding a dependent set."""

    def __init__(self, w_max, lower_bound):
        super().__init__(f"no dependent column set of size <= {w_max}; d > {w_max}")
        self.w_max = w_max
        self.lower_bound = lower_bound


class DimensionMismatch(OrecodeError, ValueError):
    pass


class InvalidParameters(OrecodeError, ValueError):
    pass


class NotDualContaining(OrecodeError, ValueError):
    pass


class NotPrimitive(OrecodeError, ValueError):
    pass


class GrayMatrixError(OrecodeError, ValueError):
    """G is singular or G G^T is not a nonzero scalar multiple of I."""


class UnknownSubject(OrecodeError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""



class ConfigError(OrecodeError, ValueError):
    pass


class ParseError(OrecodeError, ValueError):
    """Syntax error in a field, polynomial, matrix or tuple literal."""

    def __init__(self, message, text="", pos=0, line=1, token=None):
        self.text = text
        self.pos = pos
        self.line = line
        self.column = pos + 1
        self.token = token
        where = f"line {line}, column {self.column}"
        if token is not None:
            where += f", near {token!r}"
        super().__init__(f"{message} ({where})")


class UnknownSymbol(ParseError):
    pass


class ExponentOverflow(ParseError):
    pass

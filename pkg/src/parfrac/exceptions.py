"""Exception hierarchy for parfrac."""


class ParfracError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(ParfracError, TypeError):
    """Operands belong to different coefficient fields."""


class NotInvertibleError(ParfracError, ZeroDivisionError):
    """Division by zero, or inversion of a non-unit."""


class ReducibleModulusError(NotInvertibleError):
    """An extension element shares a factor with the minimal polynomial."""


class NotCoprimeError(ParfracError, ValueError):
    """Denominator factors (or a factor and a modulus) share a common divisor."""


class ParseError(ParfracError, ValueError):
    """Malformed expression text.  ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)

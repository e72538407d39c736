"""Exception hierarchy shared by every module of the package."""


class ParamGBError(Exception):
    """Base class for all errors raised by paramgb."""


class InputError(ParamGBError):
    """Malformed or inconsistent user input (CLI exit code 1)."""


class ParseError(InputError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownSymbol(ParseError):
    pass


class MalformedExpression(ParseError):
    pass


class DivisionByMainVariable(ParseError):
    pass


class ZeroDenominator(ParseError):
    """A ``/`` whose right operand is zero, possibly only modulo the space."""


class DivisionByZeroOnSpace(ParamGBError, ZeroDivisionError):
    """A parameter polynomial that vanishes on the whole space was inverted."""


class InconsistentSpace(InputError):
    """The space equations generate the unit ideal (empty space)."""


class LengthMismatch(ParamGBError, ValueError):
    pass


class ZeroPolynomial(ParamGBError, ValueError):
    pass


class EmptyDivisorList(ParamGBError, ValueError):
    pass


class DegreeOverflow(ParamGBError, OverflowError):
    pass


class BudgetExceeded(ParamGBError):
    """A configurable pair/iteration budget ran out (CLI exit code 2)."""


class OrderNotLex(ParamGBError, ValueError):
    pass


class InexactDivision(ParamGBError, ArithmeticError):
    """Internal invariant violation: an exact division left a remainder."""


class WitnessInvalid(InputError):
    pass


class NotAGroebnerBasis(ParamGBError, ValueError):
    pass


class DenominatorVanishes(ParamGBError, ZeroDivisionError):
    pass


class SpaceViolation(InputError):
    """A fibre point does not satisfy the space equations."""


class InvalidArgument(InputError, ValueError):
    pass


class PostconditionFailed(ParamGBError):
    """An internal consistency check failed; indicates a bug, not bad input."""

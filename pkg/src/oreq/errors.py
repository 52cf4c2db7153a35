"""Exception hierarchy shared by every module of the package."""


class OreError(Exception):
    """Base class for all errors raised by oreq."""


class MixedFields(OreError, TypeError):
    pass


class DivisionByZero(OreError, ZeroDivisionError):
    pass


class ZeroInput(OreError, ValueError):
    pass


class IndexOutOfRange(OreError, ValueError):
    pass


class RingMismatch(OreError, TypeError):
    pass


class ContextMismatch(OreError, TypeError):
    pass


class TruncationMismatch(OreError, ValueError):
    pass


class CapExceeded(OreError, RuntimeError):
    """A nildeg/tordeg search ran past its cap without terminating."""


class NonconvergentConstantTerm(OreError, ArithmeticError):
    """The geometric series for a quasi-inverse does not terminate modulo x^T."""


class GuardExceedsTruncation(OreError, ValueError):
    pass


class SingularSystem(OreError, ArithmeticError):
    pass


class InconsistentOverdetermined(OreError, ArithmeticError):
    pass


class BadBoundInputs(OreError, ValueError):
    pass


class NoVanishingD(OreError, ArithmeticError):
    pass


class ExprSyntaxError(OreError, ValueError):
    """Parse failure; ``pos`` is the 0-based character offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ValidationError(OreError, ValueError):
    pass


class UnknownGenerator(OreError, ValueError):
    pass

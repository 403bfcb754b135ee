"""Exception hierarchy shared by every module of the package."""


class ZhatError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeModulus(ZhatError, ValueError):
    pass


class MixedContext(ZhatError, ValueError):
    """Operands live in different rings (prime, precision or prime set differ)."""


class NotAUnit(ZhatError, ArithmeticError):
    pass


class NotApproximateRoot(ZhatError, ArithmeticError):
    pass


class SingularRoot(ZhatError, ArithmeticError):
    pass


class PrecisionExhausted(ZhatError, ArithmeticError):
    """The answer depends on p-adic digits beyond the working precision."""


class ImproperIdeal(ZhatError, ValueError):
    pass


class DenominatorInPrime(ZhatError, ArithmeticError):
    pass


class NotOpen(ZhatError, ValueError):
    pass


class NotACover(ZhatError, ValueError):
    pass


class ZeroHasNoClass(ZhatError, ValueError):
    pass


class InputError(ZhatError, ValueError):
    """Malformed user input; ``field`` names the offending key."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field

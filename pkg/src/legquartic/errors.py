"""Exception types raised by the library.

Every error derives from :class:`DomainError`, so callers (the CLI in
particular) can tell a bad mathematical input apart from a usage mistake.
"""


class DomainError(ValueError):
    """Base class for inputs outside an operation's domain."""


class NotPrimeError(DomainError):
    pass


class EvenCharacteristicError(DomainError):
    pass


class FieldTooLargeError(DomainError):
    pass


class NotPrimePowerError(DomainError):
    pass


class ZeroInversionError(DomainError, ZeroDivisionError):
    pass


class SpecMismatchError(DomainError):
    """An element or polynomial does not belong to the field/ring it is used with."""


class ZeroModulusError(DomainError, ZeroDivisionError):
    pass


class SingularParameterError(DomainError):
    """lambda is 0 or 1 (E_lambda singular) or -3 where the quartic degenerates."""


class ZeroTwistError(DomainError):
    pass


class NonDistinctError(DomainError):
    pass


class TargetNotMultipleOf4Error(DomainError):
    pass


class MethodUnavailableError(DomainError):
    pass


class SweepCapExceededError(DomainError):
    pass

"""Exception hierarchy shared by all modules."""


class IntCayleyError(Exception):
    """Base class for every error raised by this package."""


class InvalidGroupError(IntCayleyError, ValueError):
    pass


class InvalidElementError(IntCayleyError, ValueError):
    pass


class InvalidUnitError(IntCayleyError, ValueError):
    pass


class ExcludedIdentityError(IntCayleyError, ValueError):
    pass


class ResourceLimitError(IntCayleyError):
    """An operation would exceed a configured enumeration or memory cap."""


class ConnectionSetError(IntCayleyError, ValueError):
    pass


class IdentityInSetError(ConnectionSetError):
    pass


class AsymmetryError(ConnectionSetError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)


class PreconditionError(IntCayleyError, ValueError):
    pass


class OracleMisuseError(IntCayleyError, ValueError):
    pass

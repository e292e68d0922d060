"""Exception types shared across the library, mapped to CLI exit codes."""


class MaxdenumError(Exception):
    """Base class for all library errors."""


class InputError(MaxdenumError):
    """Invalid input data; the CLI reports these with exit code 2."""


class EmptyInput(InputError):
    pass


class NonPositiveEntry(InputError):
    pass


class GcdNotOne(InputError):
    pass


class DuplicateEntry(InputError):
    pass


class NotAMember(InputError):
    pass


class NotRepresentable(InputError):
    pass


class PreconditionError(MaxdenumError):
    """Method precondition not met; the CLI reports these with exit code 3."""


class NotAdditive(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


class InvalidParameters(PreconditionError):
    pass


class BoundTooSmall(PreconditionError):
    pass


class InternalCheckError(MaxdenumError):
    """A cross-check that should never fail has failed; CLI exit code 4."""

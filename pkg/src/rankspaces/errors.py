"""Exception hierarchy shared by every rankspaces module."""


class RankspacesError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(RankspacesError, ValueError):
    pass


class FieldMismatch(RankspacesError, ValueError):
    pass


class ScalarParseError(RankspacesError, ValueError):
    pass


class ReductionError(RankspacesError, ValueError):
    """A rational value cannot be reduced modulo the requested prime."""


class BudgetExceeded(RankspacesError):
    pass


class InapplicableError(RankspacesError, ValueError):
    """The requested procedure does not apply to this input."""


class SymbolicLimitError(RankspacesError):
    """Symbolic minor expansion refused outside desk-scale bounds."""


class InvariantViolation(RankspacesError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InstanceError(RankspacesError, ValueError):
    """An instance file failed validation.

    ``pointer`` is the JSON pointer of the first offending field.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.reason = message

"""Exception hierarchy shared by every module."""


class WeakChoiceError(ValueError):
    """Base class for all errors raised by this package."""


class DuplicateLabel(WeakChoiceError):
    pass


class UnknownLabel(WeakChoiceError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class AntisymmetryViolation(WeakChoiceError):
    pass


class CapExceeded(WeakChoiceError):
    pass


class NotDense(WeakChoiceError):
    pass


class NotSemiSeparative(WeakChoiceError):
    pass


class NotRestrictionClosed(WeakChoiceError):
    pass


class CoverageGap(WeakChoiceError):
    """Raised when no member of a would-be mess has domain ``domain``."""

    def __init__(self, domain, message=None):
        self.domain = tuple(domain)
        super().__init__(message or f"no member with domain {list(self.domain)}")


class NotCentred(WeakChoiceError):
    pass


class NotConsistent(WeakChoiceError):
    pass


class NotGeneric(WeakChoiceError):
    pass


class NotLinked(WeakChoiceError):
    pass


class InvalidFamily(WeakChoiceError):
    pass


class Unsatisfiable(WeakChoiceError):
    """No solution exists.

    ``conflict`` holds the indices (antichains, or index-set labels for the
    application pipelines) taking part in the final refutation.
    """

    def __init__(self, conflict=(), message=None, witness=None):
        self.conflict = tuple(conflict)
        self.witness = witness
        super().__init__(message or f"unsatisfiable; conflict set {list(self.conflict)}")


class BlocksOverlap(WeakChoiceError):
    pass


class EmptyMember(WeakChoiceError):
    pass


class DepthCap(WeakChoiceError):
    pass


class DimensionMismatch(WeakChoiceError):
    pass


class NotIndependent(WeakChoiceError):
    pass


class InfeasibleDomination(WeakChoiceError):
    pass


class ParseError(WeakChoiceError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        self.message = message
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)

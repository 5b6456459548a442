"""Exception hierarchy shared by every module of the engine."""


class NsgpError(Exception):
    """Base class for all engine errors."""


class EmptyGenerators(NsgpError, ValueError):
    pass


class NotCoprime(NsgpError, ValueError):
    pass


class BadFamilyParameters(NsgpError, ValueError):
    pass


class FullSemigroup(NsgpError, ValueError):
    """Raised when a chain builder is handed the full semigroup N_0."""


class IndexOutOfRange(NsgpError, IndexError):
    pass


class AmbientMismatch(NsgpError, ValueError):
    pass


class NotAChain(NsgpError, ValueError):
    def __init__(self, index, reason):
        super().__init__(f"not a radical chain at index {index}: {reason}")
        self.index = index
        self.reason = reason


class LastRingNotFull(NsgpError, ValueError):
    pass


class ShapeMismatch(NsgpError, ValueError):
    pass


class NotHomogeneous(ShapeMismatch):
    """A map whose entries admit no consistent degree shifts on its frames."""


class TruncationOverflow(NsgpError, ArithmeticError):
    pass


class UnstableTruncation(NsgpError, ArithmeticError):
    pass


class NoValidIndex(NsgpError, RuntimeError):
    pass


class ResolutionTooLong(NsgpError, RuntimeError):
    pass

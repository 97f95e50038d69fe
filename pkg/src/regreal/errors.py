"""Exception hierarchy shared by every module."""


class RegRealError(Exception):
    """Base class for all errors raised by regreal."""


class EmptyLanguage(RegRealError):
    pass


class NotDeterministic(RegRealError):
    pass


class NotComplete(RegRealError):
    pass


class NotWeak(RegRealError):
    pass


class NotClosed(RegRealError):
    pass


class RadixMismatch(RegRealError):
    pass


class MixedRadix(RegRealError):
    pass


class BadCoordinates(RegRealError):
    pass


class UnknownState(RegRealError):
    pass


class UnknownSink(RegRealError):
    pass


class ResourceCap(RegRealError):
    """A construction would exceed a fixed size budget."""


class OutOfRange(RegRealError):
    pass


class RangeViolation(RegRealError):
    pass


class NotAFunction(RegRealError):
    pass


class EmptyFiber(RegRealError):
    pass


class NotAffineSink(RegRealError):
    pass


class NotNowhereDense(RegRealError):
    pass


class ParseError(RegRealError):
    def __init__(self, lineno, reason):
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")

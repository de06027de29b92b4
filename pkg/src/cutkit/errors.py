"""Exception types raised by cutkit."""


class CutkitError(Exception):
    """Base class for every error raised by this package."""


class RulesetError(CutkitError, ValueError):
    pass


class EmptyRuleset(RulesetError):
    pass


class NonPositiveCut(RulesetError):
    pass


class MalformedText(RulesetError):
    pass


class TailOverlap(RulesetError):
    pass


class CutTooLarge(RulesetError):
    pass


class InfiniteRuleset(CutkitError):
    """The operation needs a finite cut-set."""


class CapacityExceeded(CutkitError):
    pass


class OracleScaleExceeded(CutkitError):
    pass


class OutOfRange(CutkitError, IndexError):
    pass


class NotApplicable(CutkitError):
    pass


class NotApplicableRuleset(NotApplicable):
    pass


class PrefixTooShort(CutkitError):
    pass


class TableTooShort(CutkitError):
    pass


class NoCandidatePeriod(CutkitError):
    pass


class HeapBeyondTable(CutkitError):
    pass

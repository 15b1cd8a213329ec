"""Exception types shared across the package."""


class SkelhuffError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(SkelhuffError):
    """A weight sequence was empty."""


class NonPositiveWeightError(SkelhuffError):
    """A weight was zero, negative, or not an integer."""


class WeightOverflowError(SkelhuffError):
    """A weight total exceeded the on-disk integer width."""


class NotFullTreeError(SkelhuffError):
    """A tree node had exactly one child."""


class ArityMismatchError(SkelhuffError):
    """A q-source and a weight sequence disagree on the symbol count."""


class KraftNotOneError(SkelhuffError):
    """A q-source does not satisfy the Kraft equality sum q_l / 2**l = 1."""


class InternalInconsistencyError(SkelhuffError):
    """An internal invariant was violated; this indicates a bug, not bad input."""


class EmptyKRangeError(InternalInconsistencyError):
    """A reachable layer state admitted no valid leaf count for the next layer."""


class EmptyRangeError(SkelhuffError):
    """A half-open integer range [a, b) was empty."""


class UnknownSymbolError(SkelhuffError):
    """Input data contained a symbol missing from the weight table."""


class EmptyAlphabetError(SkelhuffError):
    """An explicit weight table was empty."""


class CorruptHeaderError(SkelhuffError):
    """A container header failed validation."""


class TruncatedStreamError(SkelhuffError):
    """A container payload ended before all symbols were decoded."""


class PaddingNotZeroError(SkelhuffError):
    """Padding bits after the payload were not zero."""


class TooLargeError(SkelhuffError):
    """An input exceeded the size bound of an exhaustive routine."""

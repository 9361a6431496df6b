"""Exception types shared across the package."""


class MagiclabError(Exception):
    """Base class for all magiclab errors."""


class LoopEdgeError(MagiclabError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(MagiclabError):
    """The same unordered vertex pair appears more than once."""


class VertexOutOfRangeError(MagiclabError):
    """An edge endpoint is not in 0..n-1."""


class NotGraphicalError(MagiclabError):
    """The degree sequence is not realizable by a simple graph."""


class NoPlanFoundError(MagiclabError):
    """The greedy scan could not select the two required matchings."""


class InvalidPlanError(MagiclabError):
    """A surgery plan violates its invariants for the given graph."""


class UnsupportedParametersError(MagiclabError):
    """Requested construction parameters are outside the supported family."""


class ParityViolationError(MagiclabError):
    """n * r must be even for an r-regular graph on n vertices."""


class RetryLimitExceededError(MagiclabError):
    """The pairing model found no simple graph within the retry cap."""


class NoPerfectMatchingError(MagiclabError):
    """The graph has no perfect matching."""


class TooLargeError(MagiclabError):
    """Input exceeds the size cap of an exhaustive routine."""


class LengthMismatchError(MagiclabError):
    """A labeling's length does not match the graph's edge count."""


class NotFiveRegularError(MagiclabError):
    """The construction requires a 5-regular graph."""


class PreconditionViolatedError(MagiclabError):
    """A stated precondition does not hold; the message names the clause."""


class MalformedInputError(MagiclabError):
    """Serialized input does not conform to the expected format."""

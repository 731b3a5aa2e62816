"""Exception types shared across the package.

Every contract violation raises a dedicated subclass so callers (and the
CLI) can distinguish bad input from infeasible requests.
"""


class SomborError(Exception):
    """Base class for all package-specific errors."""


class MalformedInputError(SomborError):
    """Graph text does not conform to the .graph format."""


class SelfLoopError(SomborError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(SomborError):
    """The same unordered vertex pair appears twice."""


class VertexOutOfRangeError(SomborError):
    """An edge endpoint is not in [0, n)."""


class MaxDegreeExceededError(SomborError):
    """A vertex exceeds the chemical degree bound of 4."""


class DisconnectedError(SomborError):
    """Operation requires a connected graph."""


class SizeLimitExceededError(SomborError):
    """Requested size is beyond the supported desk-scale limits."""


class InfeasibleClassError(SomborError):
    """No simple connected graph exists for the requested (n, c)."""


class InfeasibleNError(SomborError):
    """A family template cannot be instantiated at the requested n."""


class PreconditionViolatedError(SomborError):
    """A transformation site does not satisfy its lemma preconditions."""


class DegenerateInputError(SomborError):
    """Regression input is constant or too small to fit."""


class MalformedCSVError(SomborError):
    """Dataset CSV is missing columns or has unparsable fields."""


class MissingFixtureError(SomborError):
    """A dataset row references a graph fixture that does not exist."""


class WrongIsomerCountError(SomborError):
    """The octane dataset must contain exactly 18 records."""


class NonChemicalFixtureError(SomborError):
    """A dataset fixture is not a chemical tree on 8 vertices."""

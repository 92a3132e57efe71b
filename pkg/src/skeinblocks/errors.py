"""Exception types raised across the package."""


class SkeinError(Exception):
    """Base class for all errors raised by skeinblocks."""


class InvalidLevel(SkeinError, ValueError):
    pass


class InvalidColor(SkeinError, ValueError):
    pass


class GraphError(SkeinError, ValueError):
    pass


class GraphSyntaxError(GraphError):
    pass


class DegreeViolation(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class NonHyperbolic(GraphError):
    pass


class DegenerateCut(GraphError):
    pass


class EmptyBlockSpace(SkeinError, ValueError):
    """The block space is zero, so a twist has no eigenvalues to compare."""


class NotCovered(SkeinError):
    """A curve situation lies outside every row of the order tables."""


class NotReal(SkeinError, ValueError):
    pass


class PrecisionExhausted(SkeinError, ArithmeticError):
    """Interval evaluation hit the precision cap without isolating the sign.

    For a nonzero input this cannot happen; seeing it means a bug.
    """


class TriviallyDefinite(SkeinError, ValueError):
    pass


class MissingCurveType(SkeinError, KeyError):
    pass

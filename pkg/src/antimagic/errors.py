"""Exception hierarchy shared by the construction pipeline."""


class AntimagicError(Exception):
    """Base class for every error raised by this package."""


class GraphError(AntimagicError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NotRegular(GraphError):
    pass


class DegreeTooSmall(GraphError):
    pass


class NotEulerian(AntimagicError):
    pass


class InvalidParams(AntimagicError, ValueError):
    pass


class MissingX0(AntimagicError, ValueError):
    pass


class TooFewReals(AntimagicError, ValueError):
    pass


class LayoutError(AntimagicError):
    """Raised when no real-vertex selection satisfies a gap specification."""


class Infeasible(LayoutError):
    pass


class BudgetExhausted(LayoutError):
    pass

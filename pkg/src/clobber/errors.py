"""Exception types shared across the package."""


class ClobberError(Exception):
    """Base class for all domain errors raised by this package."""


class IllegalMove(ClobberError):
    """A move violates the clobbering rules (wrong mover, bad target, not adjacent)."""


class InvalidSize(ClobberError):
    """A board dimension is outside the operation's domain."""


class ParseError(ClobberError):
    """A board, plan, graph, or circuit file is malformed.

    Carries 1-based ``line`` and ``col`` of the first offending character.
    """

    def __init__(self, message, line, col):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class ReplayError(ClobberError):
    """Plan replay hit an illegal or (when validated) non-alternating move.

    ``index`` is the 0-based position of the offending move in the plan.
    """

    def __init__(self, message, index):
        super().__init__(f"{message} at move index {index}")
        self.index = index


class LimitExceeded(ClobberError):
    """The input is larger than the configured exhaustive-search limit."""


class EmptyConfiguration(ClobberError):
    """The operation requires at least one stone."""


class NoConnectingSequence(ClobberError):
    """No alternating move sequence connects the given waypoint pair.

    Raised while resolving macros; on valid macro data this never fires at
    runtime, so it indicates a mistranscribed or infeasible waypoint.
    """


class EmptyGraph(ClobberError):
    """The grid graph has no vertices."""


class AnchorMissing(ClobberError):
    """The gadget cannot be built: the anchor vertex has no left neighbor."""


class InvalidCircuit(ClobberError):
    """The vertex sequence is not a Hamiltonian circuit of the graph."""


class NotAOneReduction(ClobberError):
    """The plan does not reduce the gadget to a single stone."""


class BombLeftGraph(ClobberError):
    """The white trajectory in a witness plan does not stay on graph vertices."""

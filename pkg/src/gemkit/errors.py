"""Exception hierarchy shared by all gemkit modules.

Every domain failure raises a subclass of :class:`GemError`, so callers (and
the CLI, which maps them to exit status 1) can catch one type.
"""


class GemError(ValueError):
    """Base class for all domain errors raised by gemkit."""


class OddOrder(GemError):
    """A colored graph needs an even number of vertices."""


class LoopEdge(GemError):
    """A matching fixes a vertex, i.e. the graph would contain a loop."""


class NotInvolution(GemError):
    """A matching row is not a well-formed involution on the vertex set."""


class ColorCountMismatch(GemError):
    """Wrong number of colors, or two graphs with different color sets."""


class InvalidColor(GemError):
    """A color outside the graph's color range was requested."""


class InvalidVertex(GemError):
    """A vertex index outside the graph's vertex range was requested."""


class Disconnected(GemError):
    """The operation is only defined for connected graphs."""


class NotContracted(GemError):
    """The operation needs every d-color residue to be connected."""


class WrongDimension(GemError):
    """The operation is only defined for a specific number of colors."""


class ColorMismatch(GemError):
    """A color permutation does not match the graph's color set."""


class ChiMismatch(GemError):
    """Declared Euler characteristic disagrees with the graph."""


class RankExceedsBound(GemError):
    """Declared fundamental-group rank exceeds the graph's upper bound."""


class InternalInconsistency(GemError):
    """Two checks that must agree disagreed; treat the input as corrupt."""


class UnknownFixture(GemError):
    """No built-in fixture with the requested key."""


class InvalidGenus(GemError):
    """A surface genus parameter outside its allowed range."""


class FormatError(GemError):
    """A graph file or string could not be parsed."""

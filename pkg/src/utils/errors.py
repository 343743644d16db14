"""
Exception types shared across foldlab.
"""


class FoldlabError(Exception):
    """Base class for every error raised by foldlab"""


class PolyominoError(FoldlabError):
    """A polyomino could not be built from the given holes or cuts"""


class OverlapError(PolyominoError):
    """Two holes share a removed cell, a cut segment or a grid vertex"""


class BoundaryError(PolyominoError):
    """A hole touches or leaves the outer rectangle"""


class DisconnectedError(PolyominoError):
    """The attachment graph of the cells is not connected"""


class NotPlainError(PolyominoError):
    """A band selected for contraction intersects a hole"""


class PolySyntaxError(FoldlabError, ValueError):
    """Malformed line in the polyomino text format"""

    def __init__(self, message, line=0, column=0, token=''):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"line {line}, column {column}: {message} ({token!r})")


class InconsistentEdge(FoldlabError):
    """Two placements across an attached edge are neither a roll nor a flip apart"""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(edge)

    def __str__(self):
        return f"placements across {self.edge} are not related by a fold"


class NodeLimitExceeded(FoldlabError):
    """The search expanded more nodes than allowed"""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(limit)

    def __str__(self):
        return f"node limit of {self.limit} exceeded"


class WrongFamily(FoldlabError):
    """An operation restricted to one hole family got other holes"""


class GuardExceeded(FoldlabError):
    """Too many holes for a subset sweep"""


class FacemappingMismatch(FoldlabError):
    """A facemapping does not fit its polyomino or is inconsistent"""


class UnknownFixture(FoldlabError, KeyError):
    """No fixture with the requested id"""

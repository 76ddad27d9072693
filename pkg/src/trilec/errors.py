"""Exception types shared across the package."""


class TrilecError(Exception):
    """Base class for all errors raised by trilec."""


class GraphError(TrilecError, ValueError):
    """Invalid vertex ids, self-loops or malformed adjacency."""


class NotATriangulation(TrilecError, ValueError):
    def __init__(self, message, face=None):
        super().__init__(message)
        self.face = face


class NonSimple(TrilecError, ValueError):
    pass


class EdgeNotPresent(TrilecError, KeyError):
    pass


class WrongDegree(TrilecError, ValueError):
    pass


class DiagonalAdjacent(TrilecError, ValueError):
    pass


class NotRegular(TrilecError, ValueError):
    pass


class OddOrder(TrilecError, ValueError):
    pass


class MissingList(TrilecError, KeyError):
    pass


class TooLarge(TrilecError, ValueError):
    pass


class OutOfRange(TrilecError, ValueError):
    pass


class UnknownName(TrilecError, KeyError):
    pass


class ParseError(TrilecError, ValueError):
    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.col = col

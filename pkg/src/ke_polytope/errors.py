"""Exception hierarchy shared across the package."""


class KEPolytopeError(Exception):
    """Base class for every error raised by ke_polytope."""


class DivisionByZero(KEPolytopeError, ZeroDivisionError):
    pass


class RangeError(KEPolytopeError, OverflowError):
    pass


class DegenerateInput(KEPolytopeError, ValueError):
    pass


class ParseError(KEPolytopeError, ValueError):
    pass


class ValidationError(KEPolytopeError, ValueError):
    pass


class EmptyRegion(KEPolytopeError):
    pass


class UnboundedRegion(KEPolytopeError):
    pass


class LowerDimensional(KEPolytopeError):
    pass


class ZeroMass(KEPolytopeError):
    pass

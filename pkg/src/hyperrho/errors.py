"""Exception hierarchy shared by every hyperrho module."""


class HyperrhoError(Exception):
    """Base class for all library errors."""


# --- construction / parsing -------------------------------------------------

class HypergraphError(HyperrhoError, ValueError):
    """Invalid hypergraph data."""


class EdgeWrongSize(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class HypergraphSyntaxError(HypergraphError):
    """Malformed ``.uhg`` text."""


class Disconnected(HyperrhoError, ValueError):
    pass


# --- spectral ---------------------------------------------------------------

class InvalidAlpha(HyperrhoError, ValueError):
    pass


class DimensionMismatch(HyperrhoError, ValueError):
    pass


class NegativeEntry(HyperrhoError, ValueError):
    pass


class NotKUnit(HyperrhoError, ValueError):
    pass


class NoConvergence(HyperrhoError, RuntimeError):
    def __init__(self, max_iter, width=None):
        self.max_iter = max_iter
        self.width = width
        msg = f"power iteration did not converge in {max_iter} iterations"
        if width is not None:
            msg += f" (bracket width {width:.3e})"
        super().__init__(msg)


# --- bounds -----------------------------------------------------------------

class InvalidDegrees(HyperrhoError, ValueError):
    pass


class StaleCertificate(HyperrhoError, ValueError):
    pass


class RegularInput(HyperrhoError, ValueError):
    pass


# --- transforms -------------------------------------------------------------

class TransformError(HyperrhoError, ValueError):
    """A transformation precondition does not hold."""


class VertexInEdge(TransformError):
    pass


class VertexNotInEdge(TransformError):
    pass


class EdgeCollision(TransformError):
    pass


class OverlappingEdges(TransformError):
    pass


class SizeMismatch(TransformError):
    pass


class DegreePatternViolated(TransformError):
    pass


class TheoremViolation(HyperrhoError, AssertionError):
    """A verified hypothesis did not produce the promised strict increase."""


# --- families / enumeration -------------------------------------------------

class InvalidParams(HyperrhoError, ValueError):
    pass


class ScaleExceeded(HyperrhoError, ValueError):
    pass


class ExtremalMismatch(HyperrhoError, AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ChainViolation(HyperrhoError, AssertionError):
    pass

"""Exception types shared across the library."""


class ShapeOrbitError(Exception):
    """Base class for all shapeorbit errors."""


class DegenerateInput(ShapeOrbitError):
    """Input collapses to a single point (dimension 0 is not a valid body)."""


class BadParameter(ShapeOrbitError):
    """A generator or query parameter is outside its documented range."""


class ParseError(ShapeOrbitError):
    """Malformed body file or JSON payload."""


class DimensionMismatch(ShapeOrbitError):
    """Operands live in different ambient dimensions."""


class MissingHRep(ShapeOrbitError):
    """3D inradius requires caller-supplied facet halfspaces."""


class UnsupportedDimension(ShapeOrbitError):
    """Operation is only implemented for a subset of {2, 3}."""


class NotNormalized(ShapeOrbitError):
    """Operation requires a body whose circumball is the unit ball."""


class NumericalFailure(ShapeOrbitError):
    """Iteration cap or unrecoverable numerical trouble in a kernel."""

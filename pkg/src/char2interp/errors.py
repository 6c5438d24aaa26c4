"""Exception types shared across the package."""


class Char2Error(Exception):
    """Base class for all errors raised by this package."""


class MultiplePoints(Char2Error):
    """A genuine set was required but the input carries multiplicities."""


class OutOfBox(Char2Error):
    """A point lies outside the box it was required to belong to."""


class InvalidWitness(Char2Error):
    """A dependence witness fails its own consistency conditions."""


class NotDependent(Char2Error):
    """A dependent input was required but the columns are independent."""


class NotACircuit(Char2Error):
    """The given subset is not a minimal dependent set."""


class FourLiftCell(Char2Error):
    """Some cell contains all four lifts; handled by the double-element route."""

    def __init__(self, cell):
        super().__init__(f"all four lifts of {cell} are present")
        self.cell = cell


class DimensionMismatch(Char2Error):
    """Vector or matrix dimensions do not match the expected shape."""


class ZeroCoordinate(Char2Error):
    """Evaluation coordinates must be nonzero."""


class DuplicateKnot(Char2Error):
    """Interpolation knots must be pairwise distinct."""


class SchemeFormatError(Char2Error):
    """A scheme description file could not be parsed."""


class PointFormatError(Char2Error):
    """A point-set file or inline string could not be parsed."""


class RaggedTriangle(Char2Error):
    """Diagram line r must contain exactly r tokens."""


class BadToken(Char2Error):
    """Diagram cells must be single decimal digits."""


class UnknownLabel(Char2Error):
    """No diagram label corresponds to the requested knot."""


class SizeMismatch(Char2Error):
    """Diagram block sizes are inconsistent with the multiplicities."""

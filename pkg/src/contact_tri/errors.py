"""Exception hierarchy.

Every error raised by the library derives from :class:`ContactTriError`, which
is itself a ``ValueError`` so that callers validating user input can catch the
built-in type.
"""


class ContactTriError(ValueError):
    """Base class for all library errors."""


# complex construction and certification
class EmptyInput(ContactTriError):
    pass


class DuplicateVertexInFacet(ContactTriError):
    pass


class MixedDimension(ContactTriError):
    pass


class UnknownVertex(ContactTriError, KeyError):
    pass


class NotPure(ContactTriError):
    pass


class NotSurface(ContactTriError):
    """Raised by surface classification; ``cell`` names the offending face."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class DimensionUnsupported(ContactTriError):
    pass


class NotManifoldWithBoundary(ContactTriError):
    pass


# algebra
class NotAClosedPath(ContactTriError):
    pass


class TorsionUnsupported(ContactTriError):
    pass


class Disconnected(ContactTriError):
    pass


# generators
class BadIndex(ContactTriError):
    pass


class BadParameter(ContactTriError):
    pass


class InvalidDiagonalPair(ContactTriError):
    pass


class InconsistentGluing(ContactTriError):
    def __init__(self, message, square=None):
        super().__init__(message)
        self.square = square


class QuotientNotSimplicial(ContactTriError):
    pass


# surgery
class NotAFacet(ContactTriError):
    pass


class DimensionMismatch(ContactTriError):
    pass


class FacetCollapse(QuotientNotSimplicial):
    def __init__(self, message, facet=None):
        super().__init__(message)
        self.facet = facet


class FacetCollision(QuotientNotSimplicial):
    def __init__(self, message, facets=None):
        super().__init__(message)
        self.facets = facets


# symmetry
class TooLarge(ContactTriError):
    pass


# geometry
class NotOnSphere(ContactTriError):
    pass


class MissingCoordinates(ContactTriError):
    pass


class DegenerateSlice(ContactTriError):
    pass


# ledger
class BasisMismatch(ContactTriError):
    pass

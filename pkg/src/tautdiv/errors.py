"""Exception hierarchy shared by every module of the package."""


class TautologicalError(ValueError):
    """Base class for domain errors (bad surfaces, symbols, curves, forms)."""


class UnstableSurface(TautologicalError):
    pass


class InvalidHalf(TautologicalError):
    pass


class InvalidSymbol(TautologicalError):
    pass


class InvalidCurve(TautologicalError):
    pass


class GenusZeroUnsupported(TautologicalError):
    pass


class SurfaceMismatch(TautologicalError):
    pass


class EmptySelection(TautologicalError):
    pass


class DimensionMismatch(TautologicalError):
    pass


class HypothesesFailed(TautologicalError):
    pass


class MalformedInput(TautologicalError):
    """Input that cannot be parsed at all (bad JSON shape, bad number strings)."""

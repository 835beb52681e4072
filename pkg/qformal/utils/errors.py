# errors.py - exception tree.

# All errors derive from ValueError so that the run loops in `main.py`, which
# catch ValueError the way every `xxx_run()` does, also catch domain errors.


class QformalError(ValueError):
    """Base class of all qformal errors."""
    pass


class UsageError(QformalError):
    """Invalid command-line usage or configuration key."""
    pass


class InvalidMatrix(QformalError):
    """A matrix violates the invariants of its declared type."""
    pass


class NonFinite(InvalidMatrix):
    pass


class NoConvergence(QformalError):
    pass


class DimensionMismatch(QformalError):
    pass


class AlgebraMismatch(QformalError):
    pass


class NotNormal(QformalError):
    pass


class NotSymmetric(QformalError):
    pass


class InvalidState(QformalError):
    pass


class UnknownLabel(QformalError):
    pass


class UnsupportedPartition(QformalError):
    pass


class PreconditionFailed(QformalError):
    pass


class MalformedTable(QformalError):
    pass


class InsufficientSamples(QformalError):
    pass


class ZeroProjector(QformalError):
    pass


class ZeroProbability(QformalError):
    pass


class NotOrthogonalFamily(QformalError):
    pass


class NotNormalized(QformalError):
    pass


class NotNonSignaling(QformalError):
    pass


class MalformedContexts(QformalError):
    pass


class ChecksumMismatch(QformalError):
    pass

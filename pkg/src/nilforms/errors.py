"""Exception hierarchy for the toolkit.

All library errors derive from ``NilformsError`` so callers can catch broadly;
the CLI maps subfamilies onto its exit codes.
"""

from __future__ import annotations


class NilformsError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(NilformsError, ValueError):
    """An argument is malformed (bad scalar, wrong degree, float input, ...)."""


class IndexOutOfRange(NilformsError, IndexError):
    """A basis index lies outside 1..dim, or a bracket key is not i < j."""


class JacobiViolation(NilformsError, ValueError):
    """Structure constants fail the Jacobi identity.

    ``triple`` is a witness (i, j, k) on which the Jacobiator is nonzero.
    """

    def __init__(self, triple, message=""):
        self.triple = tuple(triple)
        detail = message or f"Jacobi identity fails; witness triple {self.triple}"
        super().__init__(detail)


class AmbientMismatch(NilformsError, ValueError):
    """Operands live over different algebras."""


class DimensionMismatch(NilformsError, ValueError):
    """A matrix or vector has the wrong shape for its algebra."""


class WrongDimension(NilformsError, ValueError):
    """The algebra dimension is outside the operation's domain."""


class OddDimension(WrongDimension):
    """An even-dimensional algebra is required."""


class NotNilpotent(NilformsError, ValueError):
    """The operation is only defined for nilpotent algebras."""


class NotUnimodular(NilformsError, ValueError):
    """The operation needs a unimodular algebra (traceless adjoints)."""


class NotClosed(NilformsError, ValueError):
    """A form expected to be a cocycle is not."""


class LeeFormNotClosed(NotClosed):
    """The twisting 1-form must be closed for d_theta^2 = 0."""


class OmegaNotClosed(NotClosed):
    """The 2-form driving a Lefschetz map must be closed."""


class CupObstruction(NilformsError, ValueError):
    """A Massey product is undefined because a required cup product is nonzero."""


class PreconditionFailed(NilformsError, ValueError):
    """A stated operation precondition does not hold for the given data."""


class DegenerateMetric(NilformsError, ValueError):
    """The symmetric matrix is not positive definite."""


class IrrationalVolume(NilformsError, ValueError):
    """det(g) is not a perfect rational square, so the unit volume form
    (and hence the Hodge star itself) leaves the rational field.  The
    codifferential and Lee form do not need it and stay available."""


class NotAlmostComplex(NilformsError, ValueError):
    """The matrix J does not satisfy J^2 = -Id."""


class NotHermitian(NilformsError, ValueError):
    """(g, J) is not a compatible Hermitian pair."""


class UnknownName(NilformsError, KeyError):
    """No catalog entry under that name."""


class SalamonSyntaxError(NilformsError, ValueError):
    """Structure-tuple text failed to parse.

    ``position`` is a 0-based offset into the input; ``expected`` lists the
    token kinds that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        suffix = f" at position {position}"
        if self.expected:
            suffix += f" (expected {', '.join(self.expected)})"
        super().__init__(message + suffix)


class SchemaViolation(NilformsError, ValueError):
    """A JSON document does not match its schema.

    ``pointer`` is a JSON-pointer path to the offending node.
    """

    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class InternalInvariantBreach(NilformsError, RuntimeError):
    """A result failed its own re-verification.  Always a bug, never user error."""

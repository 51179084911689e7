"""Exception types shared across the library.

Validation of *data* (fusion axioms, S-matrix identities) never raises: violations
are collected into reports.  Exceptions are reserved for unusable inputs, resource
caps, and internal consistency failures.
"""


class FusionKitError(Exception):
    """Base class for all library errors."""


class InvalidInput(FusionKitError):
    """A precondition on an operation's input is violated."""


class FieldMismatch(InvalidInput):
    """Two exact numbers do not live in a common supported field."""


class ResourceLimit(FusionKitError):
    """A configured cap (rank, degree, group order) was exceeded."""


class ComputationError(FusionKitError):
    """An internal invariant failed; indicates a bug or corrupted input."""


class InvalidDatum(InvalidInput):
    """A modular datum is structurally unusable (e.g. zero unit-row entry)."""


class InvalidCharacterTable(InvalidInput):
    """A character table fails its orthogonality/integrality requirements."""


class InvalidQuadraticForm(InvalidInput):
    """A quadratic form on an abelian group is not admissible (b not bimultiplicative)."""


class InvalidModuleDims(InvalidInput):
    """Module dimension data violates its normalization invariant."""


class NotSlightlyDegenerate(InvalidInput):
    """Slight-degeneracy checks were requested for a datum whose center is not SuperVec."""


class ParseError(InvalidInput):
    """A structured text file does not conform to the declared format."""

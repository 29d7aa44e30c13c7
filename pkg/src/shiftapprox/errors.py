"""Exception hierarchy for shiftapprox.

Every raised condition that a caller may reasonably want to branch on has
its own class.  Hypothesis failures (horizon exhausted, weights bounded
below, ...) are distinct from internal certificate corruption, which is
always a bug.
"""


class ShiftApproxError(Exception):
    """Base class for all package errors."""


class ModeMismatchError(ShiftApproxError):
    """Exact and float scalars were mixed in one computation."""


class DependentBasisError(ShiftApproxError):
    """A family that must be linearly independent is not."""


class LocalityViolationError(ShiftApproxError):
    """A lazy operator sum has no locality entry for a touched coordinate."""


class UnboundedNormError(ShiftApproxError):
    """No certified norm bound exists for the requested operator."""


class HorizonTooShortError(ShiftApproxError):
    """A weight sequence or enumeration does not reach the requested index."""


class NotFoundWithinHorizonError(ShiftApproxError):
    """No qualifying index exists on the scanned horizon.

    For weight scans this signals that the weights are bounded below on the
    horizon, i.e. the null-subsequence hypothesis fails there.
    """


class NotNilpotentModuloError(ShiftApproxError):
    """No power of the operator drives the vector into the previous span."""


class NotInGeneralizedKernelError(ShiftApproxError):
    """A provided vector is not annihilated by any operator power."""

    def __init__(self, label, k_max):
        self.label = label
        self.k_max = k_max
        super().__init__(
            f"vector {label!r} has no kernel exponent within k_max={k_max}"
        )


class ProviderExhaustedError(ShiftApproxError):
    """The vector provider ran out before the requested chain count.

    The partially built family is attached as ``.family``.
    """

    def __init__(self, message, family=None):
        super().__init__(message)
        self.family = family


class InsufficientChainError(ShiftApproxError):
    """The enumerated chain prefix is too short to construct a preimage."""


class SingularCoefficientError(ShiftApproxError):
    """An immediate-predecessor coefficient in a certificate is zero."""


class ExceededBoundError(ShiftApproxError):
    """No annihilation within the certificate-implied power bound."""


class OverlappingBlocksError(ShiftApproxError):
    """Requested nilpotent blocks occupy intersecting coordinate ranges."""


class CertificateFailureError(ShiftApproxError):
    """An assembled operator failed its own recognizer check (a bug)."""


class SchemaError(ShiftApproxError):
    """An operator document violates the JSON schema.

    ``errors`` is a list of (json_path, reason) pairs.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        lines = "; ".join(f"{path}: {reason}" for path, reason in self.errors)
        super().__init__(f"invalid operator document: {lines}")


class UnknownTailRuleError(SchemaError):
    """A weight tail rule name is not one of the declared rules."""

    def __init__(self, path, rule):
        self.rule = rule
        SchemaError.__init__(self, [(path, f"unknown tail rule {rule!r}")])

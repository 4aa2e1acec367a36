"""Exception types shared across the package."""


class FlatFrontError(Exception):
    """Base class for every error raised by flatfront."""


class LorentzError(FlatFrontError):
    """Invalid data in the Hermitian-matrix model (bad tag, non-Hermitian input, ...)."""


class ExpressionError(FlatFrontError):
    """An expression string could not be parsed into the supported grammar."""


class EvaluationError(FlatFrontError):
    """Evaluation hit a pole or came too close to a declared branch cut."""


class DomainError(FlatFrontError):
    """A point, path, or stencil left the declared domain."""


class ConfigError(FlatFrontError):
    """Invalid job configuration."""


class IntegrationError(FlatFrontError):
    """The frame integrator failed (step underflow, non-finite values)."""


class BranchTrackingError(FlatFrontError):
    """Phase continuity of sqrt(alpha*beta) broke between consecutive samples."""


class SignatureError(FlatFrontError):
    """A norm was requested for a vector of the wrong causal type."""


class ClassificationError(FlatFrontError):
    """A curve-level operation met samples of mixed singularity type."""

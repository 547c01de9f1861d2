"""Exception hierarchy shared by all modules."""


class EquicurveError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EquicurveError):
    """Malformed polynomial text or manifest."""


class RingMismatchError(EquicurveError):
    """Operands live over different variable sets."""


class ComputationError(EquicurveError):
    """A computation could not be completed (non-stabilization, infinite dimension, ...)."""


class HypothesisError(EquicurveError):
    """Input violates the standing hypotheses of the classification theorems."""


class InternalCheckError(EquicurveError):
    """Two independent routes that must agree disagreed: a bug, not a user error."""

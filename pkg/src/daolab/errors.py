"""Exception hierarchy shared across the package."""


class DaolabError(Exception):
    """Base class for all errors raised by this package."""


class SignatureMismatch(DaolabError):
    """Operands do not share a ring signature (variables + coefficient field)."""


class ZeroPolynomialError(DaolabError):
    """An operation that needs a nonzero polynomial received zero."""


class FieldError(DaolabError):
    """Invalid coefficient-field construction (composite or even modulus, ...)."""


class ModeError(DaolabError):
    """Operation invoked in the wrong ring mode (graded vs local-at-origin)."""


class DepthHypothesisError(DaolabError):
    """The ring violates the standing hypothesis that m contains a non-zerodivisor."""


class InputError(DaolabError):
    """Mathematically invalid input (unit/zero ideal where a proper one is needed, ...)."""


class RetryExhausted(DaolabError):
    """A randomized search ran out of retries; raise trials or switch field."""


class EngineInconsistency(DaolabError):
    """An internal cross-check failed; this would falsify the implementation."""

"""Exception hierarchy shared by all sdpfeas modules."""


class SdpFeasError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SdpFeasError):
    """Malformed or out-of-contract input (negative counts, empty grids, ...)."""


class ParseError(InvalidInputError):
    """A record or descriptor could not be parsed.

    Carries the zero-based index of the offending record when applicable.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class AssumptionViolationError(SdpFeasError):
    """A precondition required by the underlying failure model does not hold.

    ``assumption`` identifies which modelling assumption was violated,
    ``detail`` says how (e.g. which confusion-matrix cell is zero).
    """

    def __init__(self, message, assumption, detail=None):
        super().__init__(message)
        self.assumption = assumption
        self.detail = detail


class DomainError(SdpFeasError):
    """Evaluation requested outside a hazard family's valid time domain."""


class WrongVariantError(SdpFeasError):
    """An X-variant operation was called on a Y-variant outcome or vice versa."""


class OutOfRegimeError(SdpFeasError):
    """The Chernoff lower-tail bound is inapplicable: the deviation band
    delta = 1 - threshold/mu falls outside (0, 1].

    This is a finding, not a defect; callers that sweep over parameters
    should catch it and report the point as out-of-regime. ``mu``,
    ``threshold`` and ``delta`` carry the diagnostics.
    """

    def __init__(self, mu, threshold, theorem_tag=None, t=None):
        self.mu = mu
        self.threshold = threshold
        self.delta = 1.0 - threshold / mu
        self.theorem_tag = theorem_tag
        self.t = t
        super().__init__(
            f"Chernoff lower tail inapplicable: threshold={threshold!r} vs "
            f"mu={mu!r} gives delta={self.delta!r} outside (0, 1]"
        )

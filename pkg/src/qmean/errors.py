"""Exception types for the estimation pipeline's distinct failure modes."""

from __future__ import annotations


class NormalizationError(ValueError):
    """Amplitude table violates the unit-norm constraint sum |A(x)|^2 = 1."""


class ReferencePointError(ValueError):
    """The chosen reference amplitude A(y) is (numerically) zero, so the
    null hypothesis carries no weight and the count ratio is undefined."""


class DegenerateTargetError(ValueError):
    """Target probability is not positive: there is nothing to amplify."""


class NullStarvationError(RuntimeError):
    """Null events are too rare to collect: the mean and the reference
    amplitude are not of comparable size, so estimating their ratio by
    counting would take an unreasonable number of shots.

    Attributes:
        n1: non-null events observed before giving up (None if not sampled).
        null_prob: exact probability of a null event, when known.
        comparable_size_warning: True when |z0|^2 < 1e-4 * |z1|^2.
    """

    def __init__(
        self,
        message: str,
        *,
        n1: int | None = None,
        null_prob: float | None = None,
        comparable_size_warning: bool = False,
    ):
        super().__init__(message)
        self.n1 = n1
        self.null_prob = null_prob
        self.comparable_size_warning = comparable_size_warning

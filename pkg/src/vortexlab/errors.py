"""Exception types shared across the package."""

from __future__ import annotations


class SingularConfigurationError(ValueError):
    """Two points of a configuration coincide (or are closer than the
    resolution limit), so the pairwise 1/(x_i - x_j) field is undefined.

    Carries the offending pair of indices in ``pair``.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class DomainError(ValueError):
    """A point lies outside the domain of the drift/superpotential."""


class NonNormalizableError(ValueError):
    """exp(-integral of W) does not decay at the grid walls, so there is
    no normalizable zero mode on this grid."""


class NoOracleError(ValueError):
    """The superpotential has no classical-polynomial oracle family."""


class EigensolverError(RuntimeError):
    """Iterative eigensolver failed to certify the requested residual
    tolerance; ``residuals`` holds the per-pair residual norms."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = residuals

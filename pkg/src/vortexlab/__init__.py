"""vortexlab: a numerical laboratory tying together moving polynomial
zeros, logarithmic-charge equilibria, factorized partner Hamiltonians,
planar Jastrow-factor equilibria, and magnetic spectra, with every claim
cross-checked against an independent oracle."""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    EigensolverError,
    NonNormalizableError,
    NoOracleError,
    SingularConfigurationError,
)
from .orthopoly import PolynomialSpec, ZeroSet
from .superpotentials import CoulombW, CustomW, HarmonicW, JacobiW

__all__ = [
    "__version__",
    "DomainError",
    "EigensolverError",
    "NonNormalizableError",
    "NoOracleError",
    "SingularConfigurationError",
    "PolynomialSpec",
    "ZeroSet",
    "CoulombW",
    "CustomW",
    "HarmonicW",
    "JacobiW",
]

"""Drift/superpotential families W(x).

The same W plays three roles: background drift for the moving-zero flow,
external field of the logarithmic-charge equilibrium, and superpotential
of the factorized partner Hamiltonians.  Each variant carries its value,
derivative, closed-form antiderivative, and natural domain.

Sign convention (certified numerically against polynomial zeros): W is
the field that balances the pairwise repulsion, i.e. at equilibrium
sum_{j != k} 1/(x_k - x_j) = W(x_k).  For the two-fixed-charge variant
this means W(x) = p/(1-x) - q/(1+x) with repelling charges p at +1 and
q at -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class HarmonicW:
    """W(x) = x on the whole line (linear confinement)."""

    domain: tuple[float, float] = (-np.inf, np.inf)

    def value(self, x):
        return x

    def derivative(self, x):
        return np.ones_like(np.asarray(x, dtype=float)) if np.ndim(x) else 1.0

    def antiderivative(self, x):
        return 0.5 * np.asarray(x) ** 2


@dataclass(frozen=True)
class CoulombW:
    """W(r) = 1/2 - (l+1)/r on r > 0 (radial problem with a repelling
    charge l+1 at the origin and linear confinement at infinity)."""

    l: int = 0
    domain: tuple[float, float] = (0.0, np.inf)

    def __post_init__(self):
        if self.l < 0 or int(self.l) != self.l:
            raise ValueError(f"l must be a non-negative integer, got {self.l!r}")

    def value(self, r):
        return 0.5 - (self.l + 1.0) / r

    def derivative(self, r):
        return (self.l + 1.0) / np.asarray(r) ** 2

    def antiderivative(self, r):
        return 0.5 * np.asarray(r) - (self.l + 1.0) * np.log(r)


@dataclass(frozen=True)
class JacobiW:
    """W(x) = p/(1-x) - q/(1+x) on (-1, 1): repelling charges p at +1
    and q at -1, both positive so the equilibrium stays interior."""

    p: float
    q: float
    domain: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self):
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"p and q must be positive, got p={self.p!r}, q={self.q!r}")

    def value(self, x):
        return self.p / (1.0 - x) - self.q / (1.0 + x)

    def derivative(self, x):
        return self.p / (1.0 - np.asarray(x)) ** 2 + self.q / (1.0 + np.asarray(x)) ** 2

    def antiderivative(self, x):
        return -self.p * np.log(1.0 - np.asarray(x)) - self.q * np.log(1.0 + np.asarray(x))


@dataclass(frozen=True)
class CustomW:
    """User-supplied W with analytic derivative over a stated open domain.

    ``antiderivative`` is optional; when omitted the electrostatic energy
    falls back to numerical quadrature from the domain midpoint.
    """

    value: Callable
    derivative: Callable
    domain: tuple[float, float]
    antiderivative: Callable | None = field(default=None)


Superpotential = Union[HarmonicW, CoulombW, JacobiW, CustomW]


def w_value(w: Superpotential, x):
    return w.value(x)


def w_derivative(w: Superpotential, x):
    return w.derivative(x)


def w_antiderivative(w: Superpotential, x):
    """Closed-form antiderivative where available, else quadrature from
    a fixed reference point inside the domain."""
    if w.antiderivative is not None:
        return w.antiderivative(x)
    from scipy.integrate import quad

    lo, hi = w.domain
    x0 = 0.5 * (max(lo, -1e3) + min(hi, 1e3))
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    vals = np.array([quad(w.value, x0, xi, limit=200)[0] for xi in xs])
    return vals if np.ndim(x) else float(vals[0])


def check_in_domain(w: Superpotential, x) -> None:
    """Raise DomainError if any point lies outside W's open domain."""
    lo, hi = w.domain
    xs = np.asarray(x, dtype=float)
    bad = (xs <= lo) | (xs >= hi)
    if np.any(bad):
        idx = int(np.argmax(bad))
        raise DomainError(
            f"point x[{idx}] = {xs.flat[idx]!r} outside the open domain ({lo}, {hi})"
        )


def has_oracle(w: Superpotential) -> bool:
    return isinstance(w, (HarmonicW, CoulombW, JacobiW))

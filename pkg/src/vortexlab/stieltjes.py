"""Equilibria of n unit logarithmic charges in an external field W.

The stationarity condition is, for every k,

    sum_{j != k} 1/(x_k - x_j) - W(x_k) = 0,

solved by damped Newton iteration with the analytic Jacobian.  For the
three classical field variants the equilibrium coincides with the zeros
of a classical orthogonal polynomial, which serves as an independent
certificate (computed by a different algorithm entirely).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import orthopoly
from .errors import NoOracleError, SingularConfigurationError
from .superpotentials import (
    CoulombW,
    CustomW,
    HarmonicW,
    JacobiW,
    Superpotential,
    check_in_domain,
    w_antiderivative,
    w_derivative,
    w_value,
)


@dataclass
class EquilibriumResult:
    positions: np.ndarray
    residual_norm: float
    iterations: int
    converged: bool


def _check_distinct(x: np.ndarray) -> None:
    order = np.argsort(x)
    xs = x[order]
    gaps = np.diff(xs)
    if len(gaps) and np.min(gaps) <= 0.0:
        k = int(np.argmin(gaps))
        raise SingularConfigurationError(
            f"coincident points at indices {order[k]} and {order[k + 1]}",
            pair=(int(order[k]), int(order[k + 1])),
        )


def residual(positions, w: Superpotential) -> np.ndarray:
    """Component k: sum_{j != k} 1/(x_k - x_j) - W(x_k)."""
    x = np.asarray(positions, dtype=float)
    _check_distinct(x)
    check_in_domain(w, x)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    return np.sum(1.0 / diff, axis=1) - w_value(w, x)


def jacobian(positions, w: Superpotential) -> np.ndarray:
    """Analytic Jacobian of residual: J_kj = 1/(x_k-x_j)^2 off-diagonal,
    J_kk = -sum_j 1/(x_k-x_j)^2 - W'(x_k)."""
    x = np.asarray(positions, dtype=float)
    _check_distinct(x)
    check_in_domain(w, x)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    inv2 = 1.0 / diff**2
    jac = inv2.copy()
    np.fill_diagonal(jac, -np.sum(inv2, axis=1) - w_derivative(w, x))
    return jac


def electrostatic_energy(positions, w: Superpotential) -> float:
    """E = -sum_{j<k} ln|x_j - x_k| + sum_k U(x_k) with U' = W.

    Its gradient is the negated residual, which the finite-difference
    tests check directly.
    """
    x = np.asarray(positions, dtype=float)
    _check_distinct(x)
    check_in_domain(w, x)
    diff = np.abs(x[:, None] - x[None, :])
    iu = np.triu_indices(len(x), k=1)
    return float(-np.sum(np.log(diff[iu])) + np.sum(w_antiderivative(w, x)))


def oracle_mapping(w: Superpotential, n: int) -> orthopoly.PolynomialSpec:
    """Classical polynomial family whose degree-n zeros solve the
    equilibrium for this field."""
    if isinstance(w, HarmonicW):
        return orthopoly.PolynomialSpec(orthopoly.HERMITE, n)
    if isinstance(w, CoulombW):
        return orthopoly.PolynomialSpec(orthopoly.LAGUERRE, n, alpha=2 * w.l + 1)
    if isinstance(w, JacobiW):
        return orthopoly.PolynomialSpec(
            orthopoly.JACOBI, n, alpha=2 * w.p - 1, beta=2 * w.q - 1
        )
    raise NoOracleError(f"no classical oracle for {type(w).__name__}")


def auto_init(w: Superpotential, n: int) -> np.ndarray:
    """Equally spaced starting points in the central region of W's domain.

    The Coulomb variant spans [1, 4n + 2(alpha+1)] with alpha = 2l+1,
    matching the scale on which the zeros spread.
    """
    if isinstance(w, HarmonicW):
        s = 0.9 * np.sqrt(2.0 * n + 1.0)
        return np.linspace(-s, s, n)
    if isinstance(w, CoulombW):
        alpha = 2 * w.l + 1
        return np.linspace(1.0, 4.0 * n + 2.0 * (alpha + 1.0), n)
    if isinstance(w, JacobiW):
        pad = 1.0 / (n + 1.0)
        return np.linspace(-1.0 + pad, 1.0 - pad, n)
    lo, hi = w.domain
    lo = max(lo, -1e6)
    hi = min(hi, 1e6)
    span = hi - lo
    return np.linspace(lo + 0.25 * span, hi - 0.25 * span, n)


def solve_equilibrium(
    w: Superpotential,
    n: int,
    init="auto",
    tol: float = 1e-10,
    max_iter: int = 200,
) -> EquilibriumResult:
    """Damped Newton iteration on the residual from ``init``.

    A step is accepted only if it shrinks the residual norm, does not
    increase the electrostatic energy, keeps the ordering strict, and
    stays inside the domain; otherwise it is halved (never clamped).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = auto_init(w, n) if isinstance(init, str) and init == "auto" else np.array(init, dtype=float)
    if len(x) != n:
        raise ValueError(f"init has length {len(x)}, expected {n}")

    lo, hi = w.domain

    def admissible(y: np.ndarray) -> bool:
        return bool(np.all(np.diff(y) > 0.0) and np.all(y > lo) and np.all(y < hi))

    if not admissible(x):
        raise ValueError("init must be strictly increasing and inside the domain")

    r = residual(x, w)
    rnorm = float(np.max(np.abs(r)))
    energy = electrostatic_energy(x, w)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        if rnorm <= tol:
            return EquilibriumResult(x, rnorm, iterations - 1, True)
        step = np.linalg.solve(jacobian(x, w), -r)
        accepted = False
        lam = 1.0
        for _ in range(60):
            y = x + lam * step
            if admissible(y):
                ry = residual(y, w)
                ry_norm = float(np.max(np.abs(ry)))
                ey = electrostatic_energy(y, w)
                if ry_norm < rnorm and ey <= energy + 1e-14 * max(1.0, abs(energy)):
                    x, r, rnorm, energy = y, ry, ry_norm, ey
                    accepted = True
                    break
            lam *= 0.5
        if not accepted:
            break
    converged = rnorm <= tol
    return EquilibriumResult(x, rnorm, iterations, converged)

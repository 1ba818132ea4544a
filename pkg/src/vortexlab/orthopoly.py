"""Classical orthogonal polynomials: evaluation, ODE residuals, and zeros.

Families use the standard normalizations: physicists' Hermite H_n,
associated Laguerre L_n^(alpha), Jacobi P_n^(alpha,beta).  Zeros come
from the eigenvalues of the symmetric tridiagonal matrix built from the
monic three-term recurrence, not from root polishing, so they stay
reliable up to degree ~50 and beyond.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

HERMITE = "hermite"
LAGUERRE = "laguerre"
JACOBI = "jacobi"

#: recurrence coefficients are memoized up to this degree
COEFFICIENT_CACHE_CAP = 128

_coeff_cache: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


@dataclass(frozen=True)
class PolynomialSpec:
    """One member of a classical family: family tag, degree, parameters.

    ``alpha`` is required for Laguerre and Jacobi, ``beta`` for Jacobi;
    both must exceed -1 or the zeros are no longer all real and simple.
    """

    family: str
    degree: int
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.family not in (HERMITE, LAGUERRE, JACOBI):
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.degree!r}")
        if self.family in (LAGUERRE, JACOBI):
            if self.alpha is None or self.alpha <= -1.0:
                raise ValueError(f"{self.family} requires alpha > -1, got {self.alpha!r}")
        if self.family == JACOBI:
            if self.beta is None or self.beta <= -1.0:
                raise ValueError(f"jacobi requires beta > -1, got {self.beta!r}")


@dataclass(frozen=True)
class ZeroSet:
    """Ascending simple real zeros of one spec; empty iff degree == 0."""

    zeros: np.ndarray
    degree: int

    @property
    def is_empty(self) -> bool:
        return self.degree == 0


def evaluate(spec: PolynomialSpec, x):
    """Evaluate the polynomial at x (scalar or array) by the three-term
    recurrence of its family."""
    x = np.asarray(x, dtype=float)
    n, a, b = spec.degree, spec.alpha, spec.beta
    if spec.family == HERMITE:
        p_prev, p = np.ones_like(x), 2.0 * x
        if n == 0:
            return p_prev if p_prev.ndim else float(p_prev)
        for k in range(1, n):
            p_prev, p = p, 2.0 * x * p - 2.0 * k * p_prev
    elif spec.family == LAGUERRE:
        p_prev, p = np.ones_like(x), 1.0 + a - x
        if n == 0:
            return p_prev if p_prev.ndim else float(p_prev)
        for k in range(1, n):
            p_prev, p = p, ((2 * k + 1 + a - x) * p - (k + a) * p_prev) / (k + 1)
    else:
        p_prev, p = np.ones_like(x), (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
        if n == 0:
            return p_prev if p_prev.ndim else float(p_prev)
        for k in range(1, n):
            s = 2 * k + a + b
            c0 = 2.0 * (k + 1) * (k + a + b + 1) * s
            c1 = (s + 1) * (a * a - b * b)
            c2 = (s + 1) * (s + 2) * s
            c3 = 2.0 * (k + a) * (k + b) * (s + 2)
            p_prev, p = p, ((c2 * x + c1) * p - c3 * p_prev) / c0
    return p if p.ndim else float(p)


def evaluate_with_derivatives(spec: PolynomialSpec, x):
    """Return (p, p', p'') at x using the exact derivative ladders of the
    family (H' = 2nH_{n-1}, L' = -L_{n-1}^{(a+1)}, P' ~ P_{n-1}^{(a+1,b+1)})."""
    n, a, b = spec.degree, spec.alpha, spec.beta
    p = evaluate(spec, x)
    zero = np.zeros_like(np.asarray(x, dtype=float))
    zero = zero if zero.ndim else 0.0
    if n == 0:
        return p, zero, zero
    if spec.family == HERMITE:
        dp = 2.0 * n * evaluate(PolynomialSpec(HERMITE, n - 1), x)
        ddp = 4.0 * n * (n - 1) * evaluate(PolynomialSpec(HERMITE, n - 2), x) if n >= 2 else zero
    elif spec.family == LAGUERRE:
        dp = -evaluate(PolynomialSpec(LAGUERRE, n - 1, alpha=a + 1), x)
        ddp = evaluate(PolynomialSpec(LAGUERRE, n - 2, alpha=a + 2), x) if n >= 2 else zero
    else:
        c = 0.5 * (n + a + b + 1)
        dp = c * evaluate(PolynomialSpec(JACOBI, n - 1, alpha=a + 1, beta=b + 1), x)
        if n >= 2:
            c2 = 0.25 * (n + a + b + 1) * (n + a + b + 2)
            ddp = c2 * evaluate(PolynomialSpec(JACOBI, n - 2, alpha=a + 2, beta=b + 2), x)
        else:
            ddp = zero
    return p, dp, ddp


def ode_residual(spec: PolynomialSpec, x):
    """Residual of the family's standard second-order ODE at x.

    Hermite:  p'' - 2x p' + 2n p
    Laguerre: x p'' + (alpha+1-x) p' + n p
    Jacobi:   (1-x^2) p'' + (beta-alpha-(alpha+beta+2)x) p' + n(n+alpha+beta+1) p
    """
    x = np.asarray(x, dtype=float)
    n, a, b = spec.degree, spec.alpha, spec.beta
    p, dp, ddp = evaluate_with_derivatives(spec, x)
    if spec.family == HERMITE:
        r = ddp - 2.0 * x * dp + 2.0 * n * p
    elif spec.family == LAGUERRE:
        r = x * ddp + (a + 1.0 - x) * dp + n * p
    else:
        r = (1.0 - x * x) * ddp + (b - a - (a + b + 2.0) * x) * dp + n * (n + a + b + 1.0) * p
    return r if np.ndim(r) else float(r)


def ode_scale(spec: PolynomialSpec, x) -> float:
    """Magnitude of the largest term entering ode_residual; used to judge
    whether a residual is numerically zero."""
    x = np.asarray(x, dtype=float)
    n, a, b = spec.degree, spec.alpha, spec.beta
    p, dp, ddp = evaluate_with_derivatives(spec, x)
    if spec.family == HERMITE:
        terms = (ddp, 2.0 * x * dp, 2.0 * n * p)
    elif spec.family == LAGUERRE:
        terms = (x * ddp, (a + 1.0 - x) * dp, n * p)
    else:
        terms = ((1.0 - x * x) * ddp, (b - a - (a + b + 2.0) * x) * dp, n * (n + a + b + 1.0) * p)
    return np.max([np.max(np.abs(t)) for t in terms])


def recurrence_coefficients(spec: PolynomialSpec) -> tuple[np.ndarray, np.ndarray]:
    """Monic recurrence coefficients (a_k, b_k), k = 0..degree-1, for
    p_{k+1} = (x - a_k) p_k - b_k p_{k-1}; b_0 is set to 0 by convention."""
    n = spec.degree
    key = (spec.family, spec.alpha, spec.beta)
    cached = _coeff_cache.get(key)
    if cached is not None and len(cached[0]) >= n:
        return cached[0][:n], cached[1][:n]
    m = max(n, 1)
    if n <= COEFFICIENT_CACHE_CAP:
        m = min(max(m, 32), COEFFICIENT_CACHE_CAP)
    a = np.zeros(m)
    b = np.zeros(m)
    k = np.arange(m, dtype=float)
    if spec.family == HERMITE:
        b[:] = k / 2.0
    elif spec.family == LAGUERRE:
        al = spec.alpha
        a[:] = 2.0 * k + al + 1.0
        b[:] = k * (k + al)
    else:
        al, be = spec.alpha, spec.beta
        a[0] = (be - al) / (al + be + 2.0)
        if m > 1:
            s = 2.0 * k[1:] + al + be
            a[1:] = (be * be - al * al) / (s * (s + 2.0))
            # k = 1 has a removable (k+al+be)/(2k+al+be-1) cancellation
            b[1] = 4.0 * (1 + al) * (1 + be) / ((2 + al + be) ** 2 * (3 + al + be))
        if m > 2:
            kk = k[2:]
            s = 2.0 * kk + al + be
            b[2:] = (
                4.0 * kk * (kk + al) * (kk + be) * (kk + al + be)
                / (s * s * (s + 1.0) * (s - 1.0))
            )
    if n <= COEFFICIENT_CACHE_CAP:
        _coeff_cache[key] = (a, b)
    return a[:n], b[:n]


def zeros(spec: PolynomialSpec) -> ZeroSet:
    """All zeros of the spec, ascending, as eigenvalues of the symmetric
    tridiagonal recurrence matrix.  Degree 0 yields the empty ZeroSet."""
    n = spec.degree
    if n == 0:
        return ZeroSet(zeros=np.empty(0), degree=0)
    a, b = recurrence_coefficients(spec)
    if n == 1:
        return ZeroSet(zeros=a.copy(), degree=1)
    vals = eigh_tridiagonal(a, np.sqrt(b[1:]), eigvals_only=True)
    return ZeroSet(zeros=vals, degree=n)


def tridiagonal_eigenvalues(diag: np.ndarray, offdiag: np.ndarray, k: int | None = None) -> np.ndarray:
    """Lowest k (or all) eigenvalues of a symmetric tridiagonal matrix.

    Shared kernel: the same solver computes polynomial zeros above and
    discretized 1D spectra elsewhere.
    """
    if k is None or k >= len(diag):
        return eigh_tridiagonal(diag, offdiag, eigvals_only=True)
    return eigh_tridiagonal(
        diag, offdiag, eigvals_only=True, select="i", select_range=(0, k - 1)
    )

"""Functional calculus for matrices: |A|, PSD square roots, fractional powers,
the semidefinite partial order, and inversion.

Two independent square-root routes are kept on purpose: :func:`psd_sqrt`
diagonalizes, :func:`psd_sqrt_iterative` runs a coupled Newton (Denman-Beavers)
iteration.  They cross-check each other in the test suite and must never be
collapsed into one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_POLICY,
    ConvergenceError,
    NotSelfAdjoint,
    TolerancePolicy,
    adjoint,
    frobenius,
    hermitian_eigen,
    symmetrize,
)

# Hard ceiling on the condition number accepted by inverse().
MAX_CONDITION = 1e8


class NotPositiveSemidefinite(ValueError):
    """Input claimed PSD has an eigenvalue below tolerance; ``witness`` holds it."""

    def __init__(self, message: str, witness: float):
        super().__init__(message)
        self.witness = witness


class NumericallySingular(ValueError):
    """Condition estimate exceeds MAX_CONDITION."""


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of a semidefinite-order comparison A <= B.

    ``witness_lambda_min`` is the smallest eigenvalue of B - A; ``margin`` is
    that eigenvalue plus the tolerance actually applied, so a negative margin
    means the comparison failed and by how much.
    """

    holds: bool
    witness_lambda_min: float
    margin: float

    def __bool__(self) -> bool:
        return self.holds


def _psd_eigenvalues(p: np.ndarray, pol: TolerancePolicy):
    """Eigendecompose a claimed-PSD matrix and clamp round-off negatives.

    Eigenvalues in [-tol, 0) are clamped to 0; anything below -tol is a real
    indefiniteness and raises, carrying the offending eigenvalue.
    """
    eig = hermitian_eigen(p, pol)
    w = eig.eigenvalues
    lam_min, lam_max = float(w[0]), float(w[-1])
    tol = pol.rel * max(1.0, lam_max) + pol.abs
    if lam_min < -tol:
        raise NotPositiveSemidefinite(
            f"matrix is not positive semidefinite: lambda_min = {lam_min:.3e}", lam_min
        )
    return np.clip(w, 0.0, None), eig.eigenvectors


def psd_sqrt(p: np.ndarray, pol: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Principal square root of a PSD matrix via eigendecomposition."""
    w, u = _psd_eigenvalues(p, pol)
    return symmetrize((u * np.sqrt(w)) @ u.conj().T)


def psd_sqrt_iterative(
    p: np.ndarray,
    pol: TolerancePolicy = DEFAULT_POLICY,
    max_iterations: int = 100,
) -> np.ndarray:
    """Principal square root via the coupled Denman-Beavers iteration.

    The input is shifted by ``pol.abs * max(1, ||p||) * I`` so the iteration's
    inverses exist for semidefinite input.  Determinant scaling accelerates
    the early phase; a single Newton correction against the shifted input
    polishes the limit.  Deliberately shares no code with :func:`psd_sqrt`.
    """
    _psd_eigenvalues(p, pol)  # same admission gate as psd_sqrt
    n = p.shape[0]
    a = symmetrize(p) + pol.abs * max(1.0, frobenius(p)) * np.eye(n)
    y = a.copy()
    z = np.eye(n, dtype=complex)
    scaling = True
    delta = np.inf
    for _ in range(max_iterations):
        try:
            if scaling:
                _, logdet_y = np.linalg.slogdet(y)
                _, logdet_z = np.linalg.slogdet(z)
                gamma = float(np.exp(-(logdet_y + logdet_z) / (2 * n)))
            else:
                gamma = 1.0
            yk, zk = gamma * y, gamma * z
            y_next = 0.5 * (yk + np.linalg.inv(zk))
            z_next = 0.5 * (zk + np.linalg.inv(yk))
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(f"iteration hit a singular factor: {exc}", delta) from exc
        delta = frobenius(y_next - yk) / max(frobenius(y_next), np.finfo(float).tiny)
        y, z = symmetrize(y_next), symmetrize(z_next)
        if scaling and delta < 1e-2:
            scaling = False  # scaling near the fixed point slows the quadratic phase
        if delta < 50 * n * np.finfo(float).eps:
            y = symmetrize(0.5 * (y + np.linalg.inv(y) @ a))
            return y
    raise ConvergenceError(
        f"square root iteration did not converge in {max_iterations} steps", delta
    )


def abs_value(a: np.ndarray, pol: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Absolute value sqrt(a* a): the unique PSD matrix whose square is a* a."""
    return psd_sqrt(symmetrize(adjoint(a) @ a), pol)


def psd_power(p: np.ndarray, alpha: float, pol: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Fractional power of a PSD matrix for alpha in [0, 1].

    Uses the 0**0 = 1 convention, so alpha = 0 always yields the identity.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    w, u = _psd_eigenvalues(p, pol)
    return symmetrize((u * w**alpha) @ u.conj().T)


def _require_self_adjoint(a: np.ndarray, pol: TolerancePolicy, label: str):
    asym = frobenius(a - a.conj().T)
    if asym > pol.rel * max(1.0, frobenius(a)) + pol.abs:
        raise NotSelfAdjoint(f"{label} operand is not self-adjoint: ||x - x*||_F = {asym:.3e}")


def loewner_leq(
    a: np.ndarray, b: np.ndarray, pol: TolerancePolicy = DEFAULT_POLICY
) -> LoewnerVerdict:
    """Decide a <= b in the semidefinite order, keeping the witness eigenvalue."""
    _require_self_adjoint(a, pol, "left")
    _require_self_adjoint(b, pol, "right")
    witness = float(np.linalg.eigvalsh(symmetrize(b - a))[0])
    tol = pol.rel * max(1.0, frobenius(a), frobenius(b)) + pol.abs
    return LoewnerVerdict(holds=witness >= -tol, witness_lambda_min=witness, margin=witness + tol)


def condition_estimate(a: np.ndarray) -> float:
    """Ratio of extreme singular values, from the eigenvalues of a* a.

    Returns +inf when the smallest eigenvalue is nonpositive, i.e. the matrix
    is singular to working precision.
    """
    gram = symmetrize(adjoint(a) @ a)
    w = np.linalg.eigvalsh(gram)
    lam_min, lam_max = float(w[0]), float(w[-1])
    if lam_max <= 0.0 or lam_min <= 0.0:
        return float("inf")
    return float(np.sqrt(lam_max / lam_min))


def inverse(a: np.ndarray) -> np.ndarray:
    """Matrix inverse, guarded by a singular-value condition estimate.

    Anything beyond MAX_CONDITION is refused rather than silently amplified.
    """
    condition = condition_estimate(a)
    if condition > MAX_CONDITION:
        raise NumericallySingular(
            f"matrix is numerically singular: condition estimate {condition:.3e}"
        )
    return np.linalg.inv(a)

"""Dense complex matrix primitives: adjoint, products, norms, Hermitian eigen.

Every matrix in this package is a square ``numpy.ndarray`` of complex128,
validated once on construction (see :func:`as_matrix`) and treated as
immutable afterwards.  All higher modules build on the handful of
operations here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class NotSelfAdjoint(ValueError):
    """Input fails the self-adjointness gate of a Hermitian-only routine."""


class ConvergenceError(RuntimeError):
    """Iterative kernel failed to converge; ``residual`` holds the witness."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative/absolute thresholds used by every approximate comparison."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if not (self.rel > 0 and self.abs > 0):
            raise ValueError(f"tolerances must be positive, got rel={self.rel}, abs={self.abs}")


DEFAULT_POLICY = TolerancePolicy()


def as_matrix(entries) -> np.ndarray:
    """Validate and return a square complex128 matrix.

    Accepts anything ``np.asarray`` does; rejects non-square shapes and
    non-finite entries.
    """
    a = np.array(entries, dtype=complex, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose.  An exact involution: adjoint(adjoint(a)) == a bitwise."""
    return np.ascontiguousarray(a.conj().T)


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product ``a @ b`` with an explicit dimension check."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def symmetrize(h: np.ndarray) -> np.ndarray:
    """Hermitian part (h + h*)/2."""
    return (h + h.conj().T) / 2


def approx_eq(x: np.ndarray, y: np.ndarray, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """The one shared approximate-equality rule:

    ``||x - y||_F <= rel * max(1, ||x||_F, ||y||_F) + abs``.
    """
    return frobenius(x - y) <= pol.rel * max(1.0, frobenius(x), frobenius(y)) + pol.abs


def rel_residual(x: np.ndarray, y: np.ndarray) -> float:
    """Frobenius distance scaled the same way :func:`approx_eq` scales it."""
    return frobenius(x - y) / max(1.0, frobenius(x), frobenius(y))


def operator_norm(a: np.ndarray) -> float:
    """Largest singular value, computed as sqrt(lambda_max(a* a))."""
    gram = symmetrize(adjoint(a) @ a)
    lam = float(np.linalg.eigvalsh(gram)[-1])
    return float(np.sqrt(max(lam, 0.0)))


@dataclass(frozen=True)
class HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; ``eigenvectors`` holds the
    orthonormal eigenvectors as columns, so ``U diag(w) U*`` reconstructs
    the input.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def hermitian_eigen(h: np.ndarray, pol: TolerancePolicy = DEFAULT_POLICY) -> HermitianEigen:
    """Eigendecomposition for self-adjoint input.

    The input is symmetrized before factorization, but asymmetry beyond the
    policy's tolerance is the caller's error and raises rather than being
    absorbed silently.
    """
    asym = frobenius(h - h.conj().T)
    if asym > pol.rel * max(1.0, frobenius(h)) + pol.abs:
        raise NotSelfAdjoint(f"input is not self-adjoint: ||h - h*||_F = {asym:.3e}")
    try:
        w, u = np.linalg.eigh(symmetrize(h))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver did not converge: {exc}", frobenius(h)) from exc
    return HermitianEigen(w, u)


def matrix_to_literal(a: np.ndarray) -> dict:
    """JSON-ready literal: ``{"dim": n, "entries": [[re, im], ...]}`` row-major."""
    n = a.shape[0]
    entries = [[float(z.real), float(z.imag)] for z in a.reshape(n * n)]
    return {"dim": n, "entries": entries}


def matrix_from_literal(obj: dict) -> np.ndarray:
    """Parse the literal produced by :func:`matrix_to_literal`, validating shape."""
    try:
        n = int(obj["dim"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix literal: {exc}") from exc
    if n < 1 or len(entries) != n * n:
        raise ValueError(f"literal claims dim {n} but carries {len(entries)} entries")
    flat = [complex(re, im) for re, im in entries]
    return as_matrix(np.array(flat, dtype=complex).reshape(n, n))

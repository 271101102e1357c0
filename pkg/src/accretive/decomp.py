"""Decomposition kernels: eigen, polar, absolute value, square roots, inverse."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from accretive.errors import DefectiveMatrix, NearSingular, NotPSD
from accretive.matcore import ORDER_TOL, as_hermitian, as_matrix, hermitize

DEFECTIVE_CAP = 1e8
SING_TOL = 1e-12


class EigResult(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray
    vec_condition: float


class PolarResult(NamedTuple):
    unitary: np.ndarray
    modulus: np.ndarray


def herm_eig(H) -> EigResult:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    w, V = np.linalg.eigh(as_hermitian(H))
    return EigResult(w, V, 1.0)


def gen_eig(A, defective_cap: float = DEFECTIVE_CAP) -> EigResult:
    """Right eigenvectors of a general matrix.

    Raises :class:`DefectiveMatrix` when the eigenvector matrix is too
    ill-conditioned for diagonalization to mean anything.
    """
    A = as_matrix(A)
    w, V = np.linalg.eig(A)
    cond = float(np.linalg.cond(V)) if np.all(np.isfinite(V)) else np.inf
    if not np.isfinite(cond) or cond > defective_cap:
        raise DefectiveMatrix(
            f"eigenvector condition {cond:.3e} exceeds {defective_cap:.1e}", cond
        )
    return EigResult(w, V, cond)


def herm_apply(H, fn) -> np.ndarray:
    """``U diag(fn(w)) U*`` for Hermitian ``H``; ``fn`` acts on real eigenvalues."""
    w, V = np.linalg.eigh(hermitize(H))
    return hermitize((V * fn(w)) @ V.conj().T)


def check_singular(s, sing_tol: float = SING_TOL) -> None:
    """Raise NearSingular when descending singular values ``s`` are too spread."""
    if s[-1] <= sing_tol * s[0]:
        ratio = s[-1] / s[0] if s[0] > 0 else 0.0
        raise NearSingular(f"sigma_min/sigma_max = {ratio:.3e}")


def polar(A, sing_tol: float = SING_TOL) -> PolarResult:
    """Polar decomposition ``A = U |A|`` from the SVD ``A = W S V*``."""
    A = as_matrix(A)
    W, s, Vh = np.linalg.svd(A)
    check_singular(s, sing_tol)
    U = W @ Vh
    modulus = hermitize((Vh.conj().T * s) @ Vh)
    return PolarResult(U, modulus)


def polar_unitary(A) -> np.ndarray:
    """A unitary factor of ``A`` even when ``A`` is singular (then not unique)."""
    W, _, Vh = np.linalg.svd(as_matrix(A))
    return W @ Vh


def abs_val(A) -> np.ndarray:
    """``|A| = (A* A)^{1/2}``."""
    _, s, Vh = np.linalg.svd(as_matrix(A))
    return hermitize((Vh.conj().T * s) @ Vh)


def _check_psd(w, tol):
    scale = max(1.0, float(np.max(np.abs(w))))
    if w[0] < -tol * scale:
        raise NotPSD(f"lambda_min = {w[0]:.3e}")
    return np.clip(w, 0.0, None)


def sqrt_psd(H, tol: float = ORDER_TOL) -> np.ndarray:
    """PSD square root; eigenvalues in ``[-tol*scale, 0)`` are clamped to 0."""
    w, V = np.linalg.eigh(as_hermitian(H))
    w = _check_psd(w, tol)
    return hermitize((V * np.sqrt(w)) @ V.conj().T)


def pd_power(H, p: float) -> np.ndarray:
    """Real power of a positive definite matrix (``p`` may be negative)."""
    w, V = np.linalg.eigh(as_hermitian(H))
    if w[0] <= 0:
        raise NotPSD(f"matrix is not positive definite (lambda_min = {w[0]:.3e})")
    return hermitize((V * w**p) @ V.conj().T)


def principal_sqrt_accretive(A) -> np.ndarray:
    """Principal square root of a matrix with spectrum off ``(-inf, 0]``.

    Raises :class:`DefectiveMatrix` if ``A`` is not safely diagonalizable; the
    caller is expected to fall back to contour evaluation.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim == 2 and A.shape[0] and _is_herm(A):
        return pd_power(A, 0.5)
    w, V, _ = gen_eig(A)
    return (V * np.sqrt(w)) @ np.linalg.inv(V)


def _is_herm(A) -> bool:
    return np.max(np.abs(A - A.conj().T)) <= 1e-14 * max(1.0, np.max(np.abs(A)))


def inverse(A, sing_tol: float = SING_TOL) -> np.ndarray:
    A = as_matrix(A)
    s = np.linalg.svd(A, compute_uv=False)
    check_singular(s, sing_tol)
    if _is_herm(A):
        return hermitize(np.linalg.inv(A))
    return np.linalg.inv(A)

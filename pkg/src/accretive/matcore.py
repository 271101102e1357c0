"""Dense complex matrix basics: real/imaginary parts, Loewner order, norms.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Hermitian
matrices are the same arrays, explicitly symmetrized on construction so that
eigensolvers never see rounding asymmetry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from accretive.errors import DimensionMismatch

ORDER_TOL = 1e-8
HERMITIAN_TOL = 1e-10


def as_matrix(X) -> np.ndarray:
    """Validate a square, finite matrix and return it as ``complex128``."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 0:
        X = X.reshape(1, 1)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("matrix has non-finite entries")
    return X


def hermitize(X) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    return (X + X.conj().T) / 2


def hermiticity_defect(X) -> float:
    X = np.asarray(X)
    return float(np.max(np.abs(X - X.conj().T), initial=0.0))


def is_hermitian(X, tol: float = HERMITIAN_TOL) -> bool:
    X = np.asarray(X)
    return hermiticity_defect(X) <= tol * (1.0 + float(np.max(np.abs(X), initial=0.0)))


def as_hermitian(H, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Certify ``H`` as Hermitian within ``tol`` and return its Hermitian part."""
    H = as_matrix(H)
    if not is_hermitian(H, tol):
        raise ValueError(
            f"matrix is not Hermitian (defect {hermiticity_defect(H):.3e})"
        )
    return hermitize(H)


def re_part(X) -> np.ndarray:
    """Hermitian real part ``(X + X*) / 2``."""
    return hermitize(as_matrix(X))


def im_part(X) -> np.ndarray:
    """Hermitian imaginary part ``(X - X*) / 2i``."""
    X = as_matrix(X)
    Y = (X - X.conj().T) / 2j
    return hermitize(Y)


def op_norm(X) -> float:
    """Spectral norm (largest singular value)."""
    X = as_matrix(X)
    return float(np.linalg.norm(X, 2))


def spectral_radius(X) -> float:
    X = as_matrix(X)
    return float(np.max(np.abs(np.linalg.eigvals(X))))


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of testing ``A <= B``.

    ``margin`` is the smallest eigenvalue of ``B - A``; the comparison holds
    when it is no worse than ``-tol * scale``.
    """

    holds: bool
    margin: float
    scale: float
    tol: float = ORDER_TOL

    @property
    def relative_margin(self) -> float:
        return self.margin / self.scale


def loewner_leq(A, B, tol: float = ORDER_TOL) -> LoewnerVerdict:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {B.shape}")
    margin = float(np.linalg.eigvalsh(hermitize(B - A))[0])
    scale = max(1.0, op_norm(A), op_norm(B))
    return LoewnerVerdict(margin >= -tol * scale, margin, scale, tol)


# --- matrix JSON interchange: {"n": int, "data": [[re, im], ...]} row-major ---

def matrix_to_dict(X, **meta) -> dict:
    X = as_matrix(X)
    data = [[float(z.real), float(z.imag)] for z in X.ravel()]
    return {"n": int(X.shape[0]), "data": data, **meta}


def matrix_from_dict(obj: dict) -> np.ndarray:
    try:
        n = int(obj["n"])
        data = obj["data"]
    except (KeyError, TypeError) as exc:
        raise ValueError("matrix JSON needs keys 'n' and 'data'") from exc
    if n < 1 or len(data) != n * n:
        raise ValueError(f"expected {n * n} entries for n={n}, got {len(data)}")
    flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    return as_matrix(flat.reshape(n, n))


def dump_matrix(X, path, **meta) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_dict(X, **meta), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))

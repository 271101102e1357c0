"""Sector angles: certification, membership, sampling oracle, random generation.

The minimal half-angle of the sector containing the numerical range of an
accretive ``A`` is computed algebraically::

    tan(alpha) = r( Re(A)^{-1/2} Im(A) Re(A)^{-1/2} )

which is exact because ``|<Im A x, x>| <= tan(alpha) <Re A x, x>`` for all x
is equivalent to ``-tan(alpha) I <= Re(A)^{-1/2} Im(A) Re(A)^{-1/2} <= tan(alpha) I``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from accretive.errors import DimensionMismatch, NotAccretive
from accretive.matcore import ORDER_TOL, as_matrix, hermitize, im_part, re_part
from accretive.rng import complex_gaussian, make_rng

ANGLE_TOL = 1e-9
PD_SHIFT = 1e-3


@dataclass(frozen=True, eq=False)
class SectorMatrix:
    """An accretive matrix bundled with a certified sector half-angle."""

    base: np.ndarray
    angle: float
    re_min: float

    def __array__(self, dtype=None, copy=None):
        return self.base if dtype is None else self.base.astype(dtype)

    @property
    def n(self) -> int:
        return self.base.shape[0]

    @property
    def sec(self) -> float:
        return 1.0 / math.cos(self.angle)

    @classmethod
    def certify(cls, A) -> "SectorMatrix":
        A = as_matrix(A)
        return cls(A, sector_angle(A), float(np.linalg.eigvalsh(re_part(A))[0]))


def _whitened_imag(A):
    R = re_part(A)
    w, V = np.linalg.eigh(R)
    if w[0] <= 0:
        raise NotAccretive(f"lambda_min(Re A) = {w[0]:.3e}")
    Ris = (V / np.sqrt(w)) @ V.conj().T
    return hermitize(Ris @ im_part(A) @ Ris)


def sector_angle(A) -> float:
    """Minimal sector half-angle of an accretive matrix, in radians."""
    M = _whitened_imag(as_matrix(A))
    return math.atan(float(np.max(np.abs(np.linalg.eigvalsh(M)))))


def angle_oracle(A, samples: int = 200_000, seed=0, batch: int = 64) -> float:
    """Lower bound on the sector angle from random unit vectors.

    Evaluates ``atan(|Im <Ax,x>| / Re <Ax,x>)`` on exactly ``samples`` random
    unit vectors and returns the maximum. A quarter of the budget is spent on
    isotropic vectors; the rest on random perturbations around the best
    vector of each imaginary sign, with an adaptive step. Only quadratic-form
    evaluations are used, never a decomposition.
    """
    A = as_matrix(A)
    if np.linalg.eigvalsh(re_part(A))[0] <= 0:
        raise NotAccretive("real part is not positive definite")
    rng = make_rng(seed)
    n = A.shape[0]

    def forms(X):
        return np.einsum("ij,ij->j", X.conj(), A @ X)

    def score(z):
        return np.arctan2(np.abs(z.imag), z.real)

    n_iso = max(1, samples // 4)
    X = complex_gaussian(rng, (n, n_iso))
    z = forms(X)
    s = score(z)
    best = float(s.max())
    remaining = samples - n_iso
    if n == 1 or remaining < 2 * batch:
        return best

    starts = []
    for mask in (z.imag >= 0, z.imag < 0):
        if mask.any():
            k = int(np.argmax(np.where(mask, s, -np.inf)))
            starts.append(X[:, k] / np.linalg.norm(X[:, k]))
    budget = remaining // len(starts)
    for x in starts:
        sx = float(score(forms(x[:, None]))[0])
        step, used = 0.3, 0
        while used + batch <= budget:
            P = x[:, None] + step * complex_gaussian(rng, (n, batch)) / math.sqrt(n)
            P /= np.linalg.norm(P, axis=0)
            sp = score(forms(P))
            used += batch
            k = int(np.argmax(sp))
            if sp[k] > sx:
                x, sx = P[:, k], float(sp[k])
                step = min(1.5 * step, 1.0)
            else:
                step *= 0.7
                if step < 1e-12:
                    step = 0.3
        best = max(best, sx)
    return best


def in_sector(A, alpha: float, tol: float = ORDER_TOL) -> bool:
    """Whether the numerical range of ``A`` lies in the sector of half-angle ``alpha``."""
    A = as_matrix(A)
    R, S = re_part(A), im_part(A)
    if np.linalg.eigvalsh(R)[0] <= 0:
        return False
    if alpha >= math.pi / 2:
        return True
    tan = math.tan(alpha)
    scale = max(1.0, float(np.linalg.norm(A, 2)))
    for sign in (1.0, -1.0):
        if np.linalg.eigvalsh(hermitize(tan * R + sign * S))[0] < -tol * scale:
            return False
    return True


def random_pd(n: int, rng) -> np.ndarray:
    """Random positive definite matrix with unit spectral norm.

    ``G*G + delta I`` with ``delta = 1e-3 ||G*G||`` keeps the condition
    number below roughly 1e3.
    """
    rng = make_rng(rng)
    G = complex_gaussian(rng, (n, n))
    R = G.conj().T @ G
    R = hermitize(R + PD_SHIFT * np.linalg.norm(R, 2) * np.eye(n))
    return R / np.linalg.norm(R, 2)


def random_hermitian(n: int, rng) -> np.ndarray:
    G = complex_gaussian(make_rng(rng), (n, n))
    return hermitize(G)


def sectorial_from_real(R, tan_target: float, rng) -> np.ndarray:
    """Attach an imaginary part to PD ``R`` so the sector angle is ``atan(tan_target)``."""
    rng = make_rng(rng)
    n = R.shape[0]
    if tan_target == 0.0:
        return np.asarray(R, dtype=complex)
    w, V = np.linalg.eigh(R)
    Rh = (V * np.sqrt(w)) @ V.conj().T
    W = random_hermitian(n, rng)
    W *= tan_target / np.max(np.abs(np.linalg.eigvalsh(W)))
    S = hermitize(Rh @ W @ Rh)
    return R + 1j * S


def random_sector(n: int, alpha: float, fill: float = 1.0, seed=0) -> SectorMatrix:
    """Random sectorial matrix with certified angle ``atan(fill * tan(alpha))``."""
    if not 0 <= alpha < math.pi / 2:
        raise ValueError(f"alpha must lie in [0, pi/2), got {alpha}")
    if not 0 < fill <= 1:
        raise ValueError(f"fill must lie in (0, 1], got {fill}")
    rng = make_rng(seed)
    R = random_pd(n, rng)
    tan_target = fill * math.tan(alpha)
    A = sectorial_from_real(R, tan_target, rng)
    return SectorMatrix(A, math.atan(tan_target), float(np.linalg.eigvalsh(R)[0]))


def sum_in_sector(A: SectorMatrix, B: SectorMatrix) -> SectorMatrix:
    a, b = np.asarray(A), np.asarray(B)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch {a.shape} vs {b.shape}")
    return SectorMatrix.certify(a + b)


def congruence_sum(Cs, As) -> np.ndarray:
    """``sum_i C_i* A_i C_i``."""
    return sum(C.conj().T @ np.asarray(A) @ C for C, A in zip(Cs, As))

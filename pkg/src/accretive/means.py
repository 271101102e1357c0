"""Operator means ``A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}`` for accretive pairs."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from accretive.decomp import DEFECTIVE_CAP, inverse, pd_power
from accretive.errors import (
    DefectiveMatrix,
    DimensionMismatch,
    NotAccretive,
    QuadratureNotConverged,
)
from accretive.matcore import as_matrix, hermitize
from accretive.matfunc import (
    FunctionSpec,
    _check_cut,
    _contour,
    _is_exactly_hermitian,
    CONTOUR_NODES,
    CONTOUR_TOL,
    fn_dual,
    power,
)

LOGMEAN_NODES = 32
LOGMEAN_TOL = 1e-7


class MeanResult(NamedTuple):
    value: np.ndarray
    route: str
    residual: float


def _pair(A, B):
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {B.shape}")
    for name, X in (("A", A), ("B", B)):
        if np.linalg.eigvalsh(hermitize(X))[0] <= 0:
            raise NotAccretive(f"{name} is not accretive")
    return A, B


class Perspective:
    """Factorization of a pair shared by every mean of that pair.

    Holds ``A^{1/2}``, ``A^{-1/2}`` and an eigendecomposition of
    ``M = A^{-1/2} B A^{-1/2}`` (or marks ``M`` for contour evaluation when
    it is not safely diagonalizable).
    """

    def __init__(self, A, B):
        self.A, self.B = _pair(A, B)
        self.hermitian = _is_exactly_hermitian(self.A) and _is_exactly_hermitian(self.B)
        self.Ah = _sqrt(self.A, self.hermitian)
        self.Aih = inverse(self.Ah)
        M = self.Aih @ self.B @ self.Aih
        self.scale = max(1.0, float(np.linalg.norm(M, 2)))
        self.eig = None
        self.residual = 0.0
        if self.hermitian:
            self.M = hermitize(M)
            w, V = np.linalg.eigh(self.M)
            _check_cut(w, self.scale)
            self.eig = (w, V, V.conj().T)
            return
        self.M = M
        w, V = np.linalg.eig(M)
        cond = float(np.linalg.cond(V)) if np.all(np.isfinite(V)) else np.inf
        if np.isfinite(cond) and cond <= DEFECTIVE_CAP:
            _check_cut(w, self.scale)
            self.eig = (w, V, np.linalg.inv(V))
            self.residual = float(np.linalg.norm(M @ V - V * w, 2) / self.scale)

    @property
    def route(self) -> str:
        return "diagonalization" if self.eig is not None else "contour"

    def inner(self, scalar_fn) -> np.ndarray:
        """``g(M)`` for a vectorized scalar map ``g``."""
        if self.eig is None:
            spec = scalar_fn if isinstance(scalar_fn, FunctionSpec) else _wrap(scalar_fn)
            return _contour(spec, self.M, CONTOUR_NODES, CONTOUR_TOL)[0]
        w, V, Vi = self.eig
        gw = scalar_fn(w.astype(complex))
        return (V * gw) @ Vi

    def mean(self, f) -> MeanResult:
        X = self.Ah @ self.inner(f) @ self.Ah
        if self.hermitian:
            X = hermitize(X)
        return MeanResult(X, self.route, self.residual)


def _wrap(g) -> FunctionSpec:
    return FunctionSpec("scalar", g, float("nan"), normalized=False, positive=False)


def _sqrt(A, hermitian):
    if hermitian:
        return pd_power(A, 0.5)
    try:
        w, V = np.linalg.eig(A)
        cond = float(np.linalg.cond(V))
        if not np.isfinite(cond) or cond > DEFECTIVE_CAP:
            raise DefectiveMatrix(f"eigenvector condition {cond:.3e}", cond)
        return (V * np.sqrt(w)) @ np.linalg.inv(V)
    except DefectiveMatrix:
        return _contour(power(0.5), A, CONTOUR_NODES, CONTOUR_TOL)[0]


def mean_sigma(f: FunctionSpec, A, B) -> MeanResult:
    """The operator mean of ``A`` and ``B`` with representing function ``f``."""
    return Perspective(A, B).mean(f)


def geom_t(A, B, t: float) -> MeanResult:
    """Weighted geometric mean ``A #_t B``; exact at ``t = 0`` and ``t = 1``."""
    if not 0 <= t <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    A, B = _pair(A, B)
    if t == 0:
        return MeanResult(A.copy(), "closed form", 0.0)
    if t == 1:
        return MeanResult(B.copy(), "closed form", 0.0)
    return Perspective(A, B).mean(power(t))


def arith_t(A, B, t: float) -> MeanResult:
    A, B = _pair(A, B)
    return MeanResult((1 - t) * A + t * B, "closed form", 0.0)


def harm_t(A, B, t: float) -> MeanResult:
    """``((1-t) A^{-1} + t B^{-1})^{-1}``."""
    A, B = _pair(A, B)
    if t == 0:
        return MeanResult(A.copy(), "closed form", 0.0)
    if t == 1:
        return MeanResult(B.copy(), "closed form", 0.0)
    X = inverse((1 - t) * inverse(A) + t * inverse(B))
    return MeanResult(X, "closed form", 0.0)


def dual_mean(f: FunctionSpec, A, B) -> MeanResult:
    return mean_sigma(fn_dual(f), A, B)


def _logmean_weights(t, literal):
    return (1 - t) / t, (1.0 if literal else t / (1 - t))


def _power_quadrature(t, nodes, w1, w2):
    """Scalar map ``z -> w1 int_0^t z^p dp + w2 int_t^1 z^p dp`` by Gauss-Legendre."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    p_lo, wt_lo = t * (x + 1) / 2, w * t / 2
    p_hi, wt_hi = t + (1 - t) * (x + 1) / 2, w * (1 - t) / 2
    p = np.concatenate([p_lo, p_hi])
    wt = np.concatenate([w1 * wt_lo, w2 * wt_hi])

    def g(z):
        z = np.asarray(z, dtype=complex)
        logz = np.log(z)[..., None]
        return np.exp(logz * p) @ wt

    return g


def logmean_op(A, B, t: float, nodes: int = LOGMEAN_NODES, literal: bool = False) -> MeanResult:
    """Weighted logarithmic mean as an integral of weighted geometric means.

    ``w1 int_0^t A #_p B dp + w2 int_t^1 A #_p B dp`` with ``w1 = (1-t)/t``
    and ``w2 = t/(1-t)``, the weights of the representing function. With
    ``literal=True`` the second weight is 1 instead. Each integral uses
    Gauss-Legendre with ``nodes`` points, checked against ``2 * nodes``.
    """
    if not 0 < t < 1:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    P = Perspective(A, B)
    w1, w2 = _logmean_weights(t, literal)
    coarse = P.mean(_power_quadrature(t, nodes, w1, w2))
    fine = P.mean(_power_quadrature(t, 2 * nodes, w1, w2))
    size = max(float(np.linalg.norm(fine.value, 2)), 1e-300)
    moved = float(np.linalg.norm(fine.value - coarse.value, 2)) / size
    if moved > LOGMEAN_TOL:
        raise QuadratureNotConverged(f"node doubling moved the result by {moved:.3e}")
    return MeanResult(fine.value, fine.route, moved)


_MEAN_KINDS = {"arith": arith_t, "harm": harm_t, "geom": geom_t}


def parse_mean(spec: str, literal: bool = False):
    """Map ``"geom:0.5"``, ``"logmean:0.25"``, ``"sigma:<fn>"`` to a callable of (A, B)."""
    from accretive.matfunc import parse_fn

    kind, _, arg = spec.strip().partition(":")
    if kind == "sigma":
        f = parse_fn(arg)
        return lambda A, B: mean_sigma(f, A, B)
    if kind == "dual":
        f = parse_fn(arg)
        return lambda A, B: dual_mean(f, A, B)
    if kind == "logmean" and arg:
        t = float(arg)
        return lambda A, B: logmean_op(A, B, t, literal=literal)
    if kind in _MEAN_KINDS and arg:
        t = float(arg)
        return lambda A, B: _MEAN_KINDS[kind](A, B, t)
    raise ValueError(f"unknown mean spec {spec!r}")

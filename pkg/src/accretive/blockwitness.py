"""2x2 block positivity, contraction witnesses and the bounds they yield for sectorial T."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from accretive.decomp import SING_TOL, abs_val, pd_power, polar_unitary
from accretive.errors import DimensionMismatch, NearSingular
from accretive.matcore import (
    ORDER_TOL,
    LoewnerVerdict,
    as_hermitian,
    as_matrix,
    hermitize,
    re_part,
)
from accretive.report import Link
from accretive.rng import complex_gaussian, make_rng
from accretive.sector import sector_angle

INNER_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BlockPSD:
    """The Hermitian block matrix ``[[a, x], [x*, b]]``."""

    a: np.ndarray
    b: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        a, b, x = as_hermitian(self.a), as_hermitian(self.b), as_matrix(self.x)
        if not a.shape == b.shape == x.shape:
            raise DimensionMismatch("block shapes differ")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "x", x)

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.a, self.x], [self.x.conj().T, self.b]])

    @cached_property
    def verdict(self) -> LoewnerVerdict:
        M = self.matrix
        margin = float(np.linalg.eigvalsh(hermitize(M))[0])
        scale = max(1.0, float(np.linalg.norm(M, 2)))
        return LoewnerVerdict(margin >= -ORDER_TOL * scale, margin, scale)


class WitnessPair(NamedTuple):
    contraction: np.ndarray
    unitary: np.ndarray


def block_is_psd(blk: BlockPSD) -> LoewnerVerdict:
    return blk.verdict


def _inv_sqrt(H):
    w = np.linalg.eigvalsh(H)
    if w[0] <= SING_TOL * max(1.0, w[-1]):
        raise NearSingular(f"diagonal block has lambda_min = {w[0]:.3e}")
    return pd_power(H, -0.5)


def extract_contraction(blk: BlockPSD) -> WitnessPair:
    """``K = a^{-1/2} x b^{-1/2}`` and the unitary factor of its polar decomposition."""
    K = _inv_sqrt(blk.a) @ blk.x @ _inv_sqrt(blk.b)
    return WitnessPair(K, polar_unitary(K))


def _angle(T, alpha):
    return sector_angle(T) if alpha is None else float(alpha)


def sector_block(T, alpha: float | None = None) -> BlockPSD:
    """``[[sec(a) Re T, T], [T*, sec(a) Re T]]``, positive semidefinite for T in the sector."""
    T = as_matrix(T)
    sec = 1.0 / math.cos(_angle(T, alpha))
    R = sec * re_part(T)
    return BlockPSD(R, R, T)


def abs_bound_unitary(T, alpha: float | None = None) -> np.ndarray:
    """``U = V*`` with ``V`` the polar unitary of ``C = (sec(a) Re T)^{-1/2} T*``."""
    T = as_matrix(T)
    sec = 1.0 / math.cos(_angle(T, alpha))
    C = _inv_sqrt(sec * re_part(T)) @ T.conj().T
    return polar_unitary(C).conj().T


def abs_bound_link(T, U, alpha: float | None = None) -> Link:
    """Margin of ``|T| <= sec(a) |(Re T)^{1/2} U (Re T)^{1/2}|``."""
    T = as_matrix(T)
    sec = 1.0 / math.cos(_angle(T, alpha))
    Rh = pd_power(re_part(T), 0.5)
    lhs = abs_val(T)
    rhs = sec * abs_val(Rh @ U @ Rh)
    margin = float(np.linalg.eigvalsh(hermitize(rhs - lhs))[0])
    scale = max(1.0, float(np.linalg.norm(lhs, 2)), float(np.linalg.norm(rhs, 2)))
    return Link("abs", margin, scale)


class InnerBound(NamedTuple):
    worst_slack: float
    violations: int
    scale: float


def inner_bound_check(
    T, trials: int = 10_000, seed=0, alpha: float | None = None, tol: float = INNER_TOL
) -> InnerBound:
    """Sample ``|<Tx,y>| <= sec/2 (|<R^{1/2} U R^{1/2} x, y>| + sqrt(<Ry,y><Rx,x>))``.

    ``R = Re T`` and ``U`` is the polar unitary of the contraction extracted
    from :func:`sector_block`. Vectors are normalized complex Gaussians.
    """
    T = as_matrix(T)
    a = _angle(T, alpha)
    sec = 1.0 / math.cos(a)
    U = extract_contraction(sector_block(T, a)).unitary
    R = re_part(T)
    Rh = pd_power(R, 0.5)
    W = Rh @ U @ Rh
    rng = make_rng(seed)
    n = T.shape[0]
    X = complex_gaussian(rng, (n, trials))
    Y = complex_gaussian(rng, (n, trials))
    X /= np.linalg.norm(X, axis=0)
    Y /= np.linalg.norm(Y, axis=0)

    def form(M):
        return np.einsum("ij,ij->j", Y.conj(), M @ X)

    lhs = np.abs(form(T))
    rx = np.einsum("ij,ij->j", X.conj(), R @ X).real
    ry = np.einsum("ij,ij->j", Y.conj(), R @ Y).real
    rhs = sec / 2 * (np.abs(form(W)) + np.sqrt(np.clip(rx * ry, 0, None)))
    slack = rhs - lhs
    scale = max(1.0, float(np.linalg.norm(T, 2)))
    return InnerBound(float(slack.min()), int(np.sum(slack < -tol * scale)), scale)


def inner_product_criterion(blk: BlockPSD, trials: int = 10_000, seed=0) -> float:
    """Worst sampled slack of ``|<x v, w>|^2 <= <a w, w><b v, v>``.

    Nonnegative (up to rounding) exactly when the block is positive semidefinite,
    given enough samples.
    """
    rng = make_rng(seed)
    n = blk.a.shape[0]
    V = complex_gaussian(rng, (n, trials))
    W = complex_gaussian(rng, (n, trials))
    V /= np.linalg.norm(V, axis=0)
    W /= np.linalg.norm(W, axis=0)
    lhs = np.abs(np.einsum("ij,ij->j", W.conj(), blk.x @ V)) ** 2
    aw = np.einsum("ij,ij->j", W.conj(), blk.a @ W).real
    bv = np.einsum("ij,ij->j", V.conj(), blk.b @ V).real
    return float(np.min(aw * bv - lhs))


def norm_chain(T, alpha: float | None = None, U=None) -> tuple[float, float, float, float]:
    """``(||T||, sec r(U Re T), sec/2 (r(U Re T) + ||Re T||), sec ||Re T||)``.

    ``U`` defaults to :func:`abs_bound_unitary`.
    """
    T = as_matrix(T)
    a = _angle(T, alpha)
    sec = 1.0 / math.cos(a)
    if U is None:
        U = abs_bound_unitary(T, a)
    R = re_part(T)
    r = float(np.max(np.abs(np.linalg.eigvals(U @ R))))
    nR = float(np.linalg.norm(R, 2))
    return (float(np.linalg.norm(T, 2)), sec * r, sec / 2 * (r + nR), sec * nR)


def chain_links(values, names=("norm<=sec*r", "sec*r<=mid", "mid<=sec*norm")) -> list[Link]:
    scale = max(1.0, *values)
    return [Link(name, hi - lo, scale) for name, lo, hi in zip(names, values, values[1:])]

"""Tsallis and relative operator entropies and differences of perspectives."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from accretive.decomp import check_singular
from accretive.matcore import as_matrix
from accretive.matfunc import FunctionSpec, ln_t
from accretive.means import Perspective, geom_t

# The three example pairs (f, g) whose perspective differences give
# A nabla_t B - A #_t B, T_t(A|B) and T_t(A|B) - S(A|B).
EXAMPLE_PAIRS = (
    ("affine:{t}", "power:{t}"),
    ("tsallis:{t}", "one"),
    ("tsallis:{t}", "log"),
)


def example_pairs(t: float) -> list[tuple[str, str]]:
    return [(f.format(t=t), g.format(t=t)) for f, g in EXAMPLE_PAIRS]


def tsallis(A, B, t: float) -> np.ndarray:
    """``T_t(A|B) = (A #_t B - A) / t`` for ``0 < t <= 1``."""
    if not 0 < t <= 1:
        raise ValueError(f"t must lie in (0, 1], got {t}")
    G = geom_t(A, B, t).value
    return (G - as_matrix(A)) / t


def tsallis_calculus(A, B, t: float) -> np.ndarray:
    """``A^{1/2} ln_t(A^{-1/2} B A^{-1/2}) A^{1/2}``, the cross-check route for :func:`tsallis`."""
    return Perspective(A, B).mean(ln_t(t)).value


def rel_entropy(A, B) -> np.ndarray:
    """``S(A|B) = A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}``."""
    return Perspective(A, B).mean(ln_t(0)).value


@dataclass(frozen=True, eq=False)
class PerspectiveDiff:
    value: np.ndarray
    f_name: str
    g_name: str
    routes: tuple[str, str]


def perspective_diff(f: FunctionSpec, g: FunctionSpec, A, B, persp=None) -> PerspectiveDiff:
    """``D_{f,g}(A|B) = A sigma_f B - A sigma_g B``."""
    P = persp if persp is not None else Perspective(A, B)
    F, G = P.mean(f), P.mean(g)
    return PerspectiveDiff(F.value - G.value, f.name, g.name, (F.route, G.route))


def congruence_diff(C, f: FunctionSpec, g: FunctionSpec, A, B):
    """Both sides of ``C* D_{f,g}(A|B) C = D_{f,g}(C*AC | C*BC)``."""
    C = as_matrix(C)
    check_singular(np.linalg.svd(C, compute_uv=False))
    A, B = as_matrix(A), as_matrix(B)
    Ch = C.conj().T
    left = Ch @ perspective_diff(f, g, A, B).value @ C
    right = perspective_diff(f, g, Ch @ A @ C, Ch @ B @ C).value
    return left, right

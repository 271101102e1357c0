"""Operator monotone functions and f(A) for matrices with spectrum off (-inf, 0].

Three independent routes compute ``f(A)``:

* :func:`apply_fn` diagonalizes ``A`` (unitarily when ``A`` is Hermitian);
* :func:`apply_fn_contour` applies the trapezoidal rule to the resolvent
  integral ``(1/2 pi i) \\oint f(z) (zI - A)^{-1} dz`` on a circle;
* :func:`power_integral_oracle` integrates the classical kernel
  ``x^r = sin(r pi)/pi \\int_0^inf s^(r-1) x (s + x)^{-1} ds`` for powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import minimize

from accretive.decomp import DEFECTIVE_CAP, gen_eig
from accretive.errors import (
    ContourHitsCut,
    DefectiveMatrix,
    QuadratureNotConverged,
    SpectrumOnCut,
)
from accretive.matcore import ORDER_TOL, as_matrix, hermitize
from accretive.rng import make_rng

SPEC_TOL = 1e-10
CONTOUR_TOL = 1e-10
CONTOUR_NODES = 256
CONTOUR_MAX_NODES = 2**19
TAYLOR_RADIUS = 1e-4


@dataclass(frozen=True)
class FunctionSpec:
    """A scalar function on C \\ (-inf, 0] used in the functional calculus.

    ``positive`` marks members of the class the mean inequalities assume:
    operator monotone, ``f(1) = 1`` and ``f((0, inf)) in (0, inf)``.
    """

    name: str
    func: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)
    deriv_at_1: float
    normalized: bool = True
    positive: bool = True
    params: tuple = ()

    def __call__(self, z):
        return self.func(np.asarray(z, dtype=complex))

    @property
    def spec(self) -> str:
        """The string form accepted by :func:`parse_fn`."""
        return self.name


def _fmt(x: float) -> str:
    return repr(float(x))


def power(r: float) -> FunctionSpec:
    if not 0 <= r <= 1:
        raise ValueError(f"power exponent must lie in [0, 1], got {r}")
    return FunctionSpec(f"power:{_fmt(r)}", lambda z: np.power(z, r), r, params=(r,))


def one() -> FunctionSpec:
    return FunctionSpec("one", lambda z: np.ones_like(z), 0.0)


def affine(t: float) -> FunctionSpec:
    _check_weight(t)
    return FunctionSpec(f"affine:{_fmt(t)}", lambda z: (1 - t) + t * z, t, params=(t,))


def harm(t: float) -> FunctionSpec:
    _check_weight(t)
    return FunctionSpec(
        f"harm:{_fmt(t)}", lambda z: 1.0 / ((1 - t) + t / z), t, params=(t,)
    )


def log_shift() -> FunctionSpec:
    """``log x + 1``: operator monotone and normalized, but not positive."""
    return FunctionSpec("log", lambda z: np.log(z) + 1.0, 1.0, positive=False)


def tsallis(t: float) -> FunctionSpec:
    """``(x^t - 1)/t + 1``; derivative 1 at x = 1, negative near 0 for t < 1."""
    if not 0 < t <= 1:
        raise ValueError(f"tsallis parameter must lie in (0, 1], got {t}")

    def func(z):
        return np.expm1(t * np.log(z)) / t + 1.0

    return FunctionSpec(
        f"tsallis:{_fmt(t)}", func, 1.0, positive=(t == 1), params=(t,)
    )


def ln_t(t: float) -> FunctionSpec:
    """``(x^t - 1)/t`` (not normalized); ``t = 0`` gives ``log``."""
    if t == 0:
        return FunctionSpec("ln", np.log, 1.0, normalized=False, positive=False)
    return FunctionSpec(
        f"ln_t:{_fmt(t)}",
        lambda z: np.expm1(t * np.log(z)) / t,
        1.0,
        normalized=False,
        positive=False,
        params=(t,),
    )


def neg_power(r: float) -> FunctionSpec:
    """``x^{-r}``, operator monotone decreasing; used for inverse powers."""
    return FunctionSpec(
        f"negpower:{_fmt(r)}",
        lambda z: np.power(z, -r),
        -r,
        positive=False,
        params=(r,),
    )


def _logmean_eval(t: float, z: np.ndarray) -> np.ndarray:
    # In w = log z: (x^t-1)/log x = expm1(t w)/w, (x - x^t)/log x = (expm1(w) - expm1(t w))/w
    w = np.log(z)
    small = np.abs(w) < TAYLOR_RADIUS
    ws = np.where(small, 1.0, w)
    f1 = np.expm1(t * w) / ws
    f2 = (np.expm1(w) - np.expm1(t * w)) / ws
    if np.any(small):
        f1s = np.zeros_like(w)
        f2s = np.zeros_like(w)
        for k in range(1, 6):
            coef = w ** (k - 1) / math.factorial(k)
            f1s = f1s + t**k * coef
            f2s = f2s + (1 - t**k) * coef
        f1 = np.where(small, f1s, f1)
        f2 = np.where(small, f2s, f2)
    return (1 - t) / t * f1 + t / (1 - t) * f2


def logmean(t: float) -> FunctionSpec:
    """Representing function of the weighted logarithmic mean, ``0 < t < 1``."""
    if not 0 < t < 1:
        raise ValueError(f"logmean weight must lie in (0, 1), got {t}")
    return FunctionSpec(
        f"logmean:{_fmt(t)}", lambda z: _logmean_eval(t, z), t, params=(t,)
    )


def logmean_scalar(t: float, x: float) -> float:
    if x <= 0:
        raise ValueError("logmean_scalar needs x > 0")
    if not 0 < t < 1:
        raise ValueError(f"logmean weight must lie in (0, 1), got {t}")
    return float(_logmean_eval(t, np.asarray(x, dtype=complex)).real)


def fn_dual(f: FunctionSpec) -> FunctionSpec:
    """The function ``x / f(x)`` defining the dual mean."""
    if not f.normalized:
        raise ValueError("dual requires a normalized function")
    if f.name.startswith("dual(") and f.name.endswith(")"):
        return parse_fn(f.name[5:-1])
    return FunctionSpec(
        f"dual({f.name})",
        lambda z: z / f(z),
        1.0 - f.deriv_at_1,
        positive=f.positive,
        params=f.params,
    )


def _check_weight(t):
    if not 0 <= t <= 1:
        raise ValueError(f"weight must lie in [0, 1], got {t}")


_PARAMETRIC = {
    "power": power,
    "affine": affine,
    "harm": harm,
    "tsallis": tsallis,
    "logmean": logmean,
}


def parse_fn(spec: str) -> FunctionSpec:
    """Parse ``"power:0.5"``, ``"log"``, ``"dual(harm:0.3)"`` and friends."""
    spec = spec.strip()
    if spec.startswith("dual(") and spec.endswith(")"):
        return fn_dual(parse_fn(spec[5:-1]))
    if spec == "log":
        return log_shift()
    if spec == "one":
        return one()
    name, _, arg = spec.partition(":")
    if name not in _PARAMETRIC or not arg:
        raise ValueError(f"unknown function spec {spec!r}")
    return _PARAMETRIC[name](float(arg))


def builtin_specs(t: float = 0.5, r: float = 0.5) -> list[FunctionSpec]:
    return [power(r), affine(t), harm(t), log_shift(), tsallis(t), logmean(t)]


# --- evaluation ---------------------------------------------------------------

class FuncResult(NamedTuple):
    value: np.ndarray
    route: str
    residual: float


def cut_distance(z) -> np.ndarray:
    """Distance from each point to the ray (-inf, 0]."""
    z = np.asarray(z, dtype=complex)
    return np.where(z.real >= 0, np.abs(z), np.abs(z.imag))


def _check_cut(values, scale):
    d = cut_distance(values)
    if np.any(d <= SPEC_TOL * scale):
        raise SpectrumOnCut(f"eigenvalue within {d.min():.3e} of (-inf, 0]")


def _is_exactly_hermitian(A) -> bool:
    return np.max(np.abs(A - A.conj().T)) <= 1e-14 * max(1.0, np.max(np.abs(A)))


def funm(f, A, defective_cap: float = DEFECTIVE_CAP) -> FuncResult:
    """``f(A)`` by diagonalization, with the route and residual recorded."""
    A = as_matrix(A)
    scale = max(1.0, float(np.linalg.norm(A, 2)))
    if _is_exactly_hermitian(A):
        w, V = np.linalg.eigh(hermitize(A))
        _check_cut(w, scale)
        value = (V * f(w)) @ V.conj().T
        return FuncResult(hermitize(value), "hermitian", 0.0)
    w, V, _ = gen_eig(A, defective_cap)
    _check_cut(w, scale)
    residual = float(np.linalg.norm(A @ V - V * w, 2) / scale)
    value = np.linalg.solve(V.T, (V * f(w)).T).T
    return FuncResult(value, "diagonalization", residual)


def apply_fn(f, A) -> np.ndarray:
    """``V diag(f(lambda)) V^{-1}``; raises DefectiveMatrix or SpectrumOnCut."""
    return funm(f, A).value


def evaluate(f, A) -> FuncResult:
    """Diagonalization, falling back to contour quadrature for defective ``A``."""
    try:
        return funm(f, A)
    except DefectiveMatrix:
        value, residual = _contour(f, as_matrix(A), CONTOUR_NODES, CONTOUR_TOL)
        return FuncResult(value, "contour", residual)


def _circle_quality(c, eigs):
    d = float(cut_distance(c))
    if d <= 0:
        return math.inf, 0.0, d
    r_in = float(np.max(np.abs(eigs - c)))
    return r_in / d, r_in, d


def contour_circle(eigs) -> tuple[complex, float]:
    """Centre and radius of a circle enclosing ``eigs`` and avoiding the cut.

    The default is the circle around the mean eigenvalue with radius 1.5 times
    the spread, shifted right if it comes within ``0.1 rho`` of the cut. Wide
    spectra (typical for ill-conditioned real parts) admit no such circle; the
    fallback minimizes ``spread / clearance`` over centres and puts the radius
    at the geometric mean of spread and clearance.
    """
    eigs = np.asarray(eigs, dtype=complex)
    c = complex(np.mean(eigs))
    spread = float(np.max(np.abs(eigs - c)))
    floor = 0.05 * float(cut_distance(c)) if cut_distance(c) > 0 else 0.0
    step = 0.5 * max(spread, floor)
    for k in range(11):
        ck = c + k * step
        rho = 1.5 * max(float(np.max(np.abs(eigs - ck))), 0.05 * abs(ck))
        if cut_distance(ck) - rho >= 0.1 * rho:
            return ck, rho

    def objective(p):
        return _circle_quality(complex(p[0], p[1]), eigs)[0]

    starts = [
        (c.real, c.imag),
        (0.5 * (np.min(np.abs(eigs)) + np.max(np.abs(eigs))), 0.0),
        (np.max(np.abs(eigs)), c.imag),
    ]
    best = None
    for s in starts:
        res = minimize(objective, np.asarray(s, dtype=float), method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
        if best is None or res.fun < best.fun:
            best = res
    center = complex(best.x[0], best.x[1])
    q, r_in, d = _circle_quality(center, eigs)
    if not q < 1 - 1e-9:
        raise ContourHitsCut("no circle separates the spectrum from (-inf, 0]")
    r_in = max(r_in, 0.05 * d)
    return center, math.sqrt(r_in * d)


def _trapezoid_terms(f, A, center, rho, theta, chunk=4096):
    n = A.shape[0]
    eye = np.eye(n)
    total = np.zeros((n, n), dtype=complex)
    for lo in range(0, theta.size, chunk):
        th = theta[lo:lo + chunk]
        dz = rho * np.exp(1j * th)
        z = center + dz
        res = np.linalg.inv(z[:, None, None] * eye - A)
        total += np.einsum("k,kij->ij", f(z) * dz, res)
    return total


def _contour(f, A, nodes, tol):
    eigs = np.linalg.eigvals(A)
    scale = max(1.0, float(np.linalg.norm(A, 2)))
    _check_cut(eigs, scale)
    center, rho = contour_circle(eigs)
    N = int(nodes)
    total = _trapezoid_terms(f, A, center, rho, 2 * np.pi * np.arange(N) / N)
    prev = total / N
    while True:
        total = total + _trapezoid_terms(
            f, A, center, rho, 2 * np.pi * (np.arange(N) + 0.5) / N
        )
        N *= 2
        value = total / N
        diff = float(np.linalg.norm(value - prev, 2))
        size = max(float(np.linalg.norm(value, 2)), 1e-300)
        if diff <= tol * size:
            return value, diff / size
        if N >= CONTOUR_MAX_NODES:
            raise QuadratureNotConverged(
                f"contour quadrature moved {diff / size:.3e} at {N} nodes"
            )
        prev = value


def apply_fn_contour(f, A, nodes: int = CONTOUR_NODES, tol: float = CONTOUR_TOL):
    """``f(A)`` from the resolvent integral on a circle around the spectrum.

    Nodes double from ``nodes`` until consecutive trapezoid sums agree to
    ``tol`` (relative).
    """
    return _contour(f, as_matrix(A), nodes, tol)[0]


def power_integral_oracle(r: float, A, nodes: int = 200) -> np.ndarray:
    """``A^r`` for ``0 < r < 1`` from the Stieltjes-type integral of the power.

    With ``s = u / (1 - u)`` the integral becomes
    ``sin(r pi)/pi \\int_0^1 u^(r-1) (1-u)^(-r) A (uI + (1-u)A)^{-1} du``.
    Each half of ``[0, 1]`` gets a power substitution that absorbs its
    endpoint singularity, then Gauss-Legendre with ``nodes // 2`` points.
    """
    if not 0 < r < 1:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    A = as_matrix(A)
    n = A.shape[0]
    eye = np.eye(n)
    m = max(2, nodes // 2)
    x, w = np.polynomial.legendre.leggauss(m)
    v = (x + 1) / 2
    w = w / 2
    k = 2  # weight becomes v^(k-1) after substitution

    # u in [0, 1/2]: u = v^p / 2, p = k / r
    p = k / r
    u_lo = v**p / 2
    wt_lo = w * 2.0**-r * p * v ** (k - 1) * (1 - u_lo) ** -r
    # u in [1/2, 1]: 1 - u = v^q / 2, q = k / (1 - r)
    q = k / (1 - r)
    s_hi = v**q / 2
    u_hi = 1 - s_hi
    wt_hi = w * 2.0 ** (r - 1) * q * v ** (k - 1) * u_hi ** (r - 1)

    u = np.concatenate([u_lo, u_hi])
    wt = np.concatenate([wt_lo, wt_hi])
    mats = u[:, None, None] * eye + (1 - u)[:, None, None] * A
    g = np.linalg.solve(mats, np.broadcast_to(A, mats.shape))
    return math.sin(r * math.pi) / math.pi * np.einsum("k,kij->ij", wt, g)


# --- spot checks ----------------------------------------------------------------

def check_spec(f: FunctionSpec, pairs: int = 200, seed=0, tol: float = ORDER_TOL) -> dict:
    """Numerical spot check of the class properties of ``f``.

    Returns a dict with the normalization error, the minimum on a positive
    grid and the worst monotonicity margin over random pairs ``0 < H <= K``.
    """
    from accretive.sector import random_pd

    rng = make_rng(seed)
    grid = np.geomspace(1e-3, 1e3, 61)
    values = f(grid).real
    worst = math.inf
    for _ in range(pairs):
        n = int(rng.integers(1, 5))
        H = random_pd(n, rng) * rng.uniform(0.1, 2.0)
        G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        K = H + rng.uniform(0, 1) * hermitize(G @ G.conj().T) / n
        FH, FK = funm(f, H).value, funm(f, K).value
        scale = max(1.0, np.linalg.norm(FH, 2), np.linalg.norm(FK, 2))
        worst = min(worst, float(np.linalg.eigvalsh(hermitize(FK - FH))[0]) / scale)
    return {
        "normalization_error": float(abs(f(1.0) - 1.0)),
        "grid_min": float(values.min()),
        "monotone_margin": worst,
        "monotone": worst >= -tol,
    }

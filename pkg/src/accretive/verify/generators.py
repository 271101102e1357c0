"""Random inputs satisfying the hypotheses of each check."""

from __future__ import annotations

import numpy as np

from accretive.decomp import pd_power
from accretive.errors import GenerationFailure
from accretive.matcore import hermitize
from accretive.matfunc import FunctionSpec, affine, harm, logmean, power
from accretive.rng import complex_gaussian
from accretive.sector import random_pd, random_sector, sectorial_from_real

MAX_ATTEMPTS = 100

# Members of the positive operator monotone class, parametrized by t.
FN_FAMILIES = {
    "power": power,
    "affine": affine,
    "harm": harm,
    "logmean": logmean,
}


def sector(rng, n: int, alpha: float) -> np.ndarray:
    return np.asarray(random_sector(n, alpha, 1.0, rng))


def weight(rng, lo: float = 0.05, hi: float = 0.95) -> float:
    return float(rng.uniform(lo, hi))


def draw_fn(rng, opts: dict, t: float | None = None) -> FunctionSpec:
    """A function from the positive class; ``opts["fn"]`` overrides the draw.

    With ``t`` given the function has derivative ``t`` at 1.
    """
    if opts.get("fn") is not None:
        return opts["fn"]
    name = list(FN_FAMILIES)[int(rng.integers(len(FN_FAMILIES)))]
    if t is None:
        t = weight(rng)
    return FN_FAMILIES[name](t)


def ordered_pair(rng, n: int, alpha: float, max_attempts: int = MAX_ATTEMPTS):
    """``A, B`` in the sector of angle ``alpha`` with ``Re A <= Re B``.

    ``B`` is drawn first; a PSD gap ``P`` of random rank is subtracted from
    ``Re B`` and the draw is repeated, halving the cap on ``||P||`` each
    time, until ``Re A = Re B - P`` is positive definite. Returns ``A, B, lambda_min(P)``.
    """
    B = sector(rng, n, alpha)
    RB = hermitize(B)
    top = float(np.linalg.eigvalsh(RB)[-1])
    cap = top
    for _ in range(max_attempts):
        k = int(rng.integers(1, n + 1))
        G = complex_gaussian(rng, (n, k))
        P = hermitize(G @ G.conj().T)
        P *= rng.uniform(0, 1) * cap / np.linalg.norm(P, 2)
        cap *= 0.5
        RA = RB - P
        if np.linalg.eigvalsh(RA)[0] > 1e-6 * top:
            A = sectorial_from_real(RA, np.tan(alpha), rng)
            return A, B, float(np.linalg.eigvalsh(P)[0])
    raise GenerationFailure(f"no admissible gap after {max_attempts} attempts")


def unital_family(rng, n: int, k: int) -> list[np.ndarray]:
    """``C_1..C_k`` with ``sum C_i* C_i = I`` exactly (up to rounding)."""
    Cs = [complex_gaussian(rng, (n, n)) for _ in range(k)]
    S = hermitize(sum(C.conj().T @ C for C in Cs))
    Sih = pd_power(S, -0.5)
    return [C @ Sih for C in Cs]


def contraction(rng, n: int) -> np.ndarray:
    G = complex_gaussian(rng, (n, n))
    return G * (rng.uniform(0.05, 1.0) / np.linalg.norm(G, 2))


def invertible(rng, n: int, max_cond: float = 1e4, max_attempts: int = MAX_ATTEMPTS):
    for _ in range(max_attempts):
        C = complex_gaussian(rng, (n, n))
        if np.linalg.cond(C) <= max_cond:
            return C
    raise GenerationFailure("no well-conditioned matrix drawn")


def pd(rng, n: int) -> np.ndarray:
    return random_pd(n, rng)

"""Run registry checks: single instances, seeded fuzz sweeps, sharpness."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from accretive.errors import AccretiveError
from accretive.matcore import ORDER_TOL
from accretive.report import CheckReport, Summary, summarize
from accretive.rng import derive_seed, make_rng, name_key
from accretive.verify.registry import REGISTRY, THEOREM_IDS

ALPHA_GRID = (0.0, math.pi / 6, math.pi / 4, math.pi / 3)
N_CYCLE = (2, 3, 4, 5, 6)


def resolve_ids(ids) -> list[str]:
    """Expand ``ALL`` and validate names; raises KeyError on an unknown id."""
    out = []
    for name in ids:
        if name == "ALL":
            out.extend(THEOREM_IDS)
        elif name in REGISTRY:
            out.append(name)
        else:
            raise KeyError(name)
    return out


def run_check(theorem: str, n: int, alpha: float, seed: int, opts: dict | None = None,
              tol: float = ORDER_TOL) -> CheckReport:
    """Instantiate one check; kernel failures become a failed report with a reason."""
    entry = REGISTRY[theorem]
    opts = dict(opts or {})
    report = CheckReport(theorem, int(n), float(alpha), int(seed), tol=tol)
    rng = make_rng(seed)
    try:
        with np.errstate(all="ignore"):
            outcome = entry.check(rng, int(n), float(alpha), opts)
    except (AccretiveError, np.linalg.LinAlgError) as exc:
        report.reason = f"{type(exc).__name__}: {exc}"
        return report
    report.links = outcome.links
    report.params = outcome.params
    report.ratio = outcome.ratio
    return report


def trial_seed(seed: int, theorem: str, alpha_index: int, trial: int) -> int:
    return derive_seed(seed, name_key(theorem), alpha_index, trial)


def _jobs(theorem, trials, alphas, seed, n=None):
    for ai, alpha in enumerate(alphas):
        for k in range(trials):
            dim = N_CYCLE[k % len(N_CYCLE)] if n is None else n
            yield (theorem, dim, alpha, trial_seed(seed, theorem, ai, k))


def _run_chunk(args):
    chunk, opts, tol = args
    return [run_check(th, n, a, s, opts, tol) for th, n, a, s in chunk]


def run_many(jobs, opts=None, workers: int = 1, tol: float = ORDER_TOL, chunk: int = 50):
    """Run ``(theorem, n, alpha, seed)`` jobs; the order of results matches ``jobs``."""
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= chunk:
        return _run_chunk((jobs, opts, tol))
    chunks = [jobs[i:i + chunk] for i in range(0, len(jobs), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_run_chunk, [(c, opts, tol) for c in chunks])
        return [r for part in parts for r in part]


def fuzz(theorem: str, trials: int, alphas=ALPHA_GRID, seed: int = 0, n=None,
         opts=None, workers: int = 1, tol: float = ORDER_TOL):
    """Run ``trials`` checks per angle. Returns ``(reports, summaries)``.

    ``n`` cycles through 2..6 unless fixed. Trial ``k`` at angle index ``i``
    uses seed ``derive_seed(seed, crc32(theorem), i, k)``, so results do not
    depend on ``workers``.
    """
    reports = run_many(_jobs(theorem, trials, alphas, seed, n), opts, workers, tol)
    label = "2-6" if n is None else str(n)
    summaries = [
        summarize(theorem, a, seed, reports[i * trials:(i + 1) * trials], label)
        for i, a in enumerate(alphas)
    ]
    return reports, summaries


def sharpness(theorem: str, trials: int, n: int, alpha: float, seed: int = 0,
              opts=None, workers: int = 1) -> dict:
    """Empirical use of the bound constant: max over trials of attained/allowed."""
    reports = run_many(
        [(theorem, n, alpha, trial_seed(seed, theorem, 0, k)) for k in range(trials)],
        opts,
        workers,
    )
    ratios = [r.ratio for r in reports if r.ratio is not None]
    link_min = {}
    for r in reports:
        for k in r.links:
            link_min[k.name] = min(link_min.get(k.name, math.inf), k.relative)
    summary: Summary = summarize(theorem, alpha, seed, reports, str(n))
    return {
        "theorem": theorem,
        "n": n,
        "alpha": alpha,
        "trials": trials,
        "seed": seed,
        "max_ratio": max(ratios) if ratios else None,
        "mean_ratio": float(np.mean(ratios)) if ratios else None,
        "min_ratio": min(ratios) if ratios else None,
        "link_min_margins": link_min,
        "violations": summary.violations,
        "summary": summary,
    }

"""Check reports: margins of asserted Loewner differences, JSON lines and CSV."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from accretive.matcore import ORDER_TOL

CSV_COLUMNS = ("theorem", "n", "alpha", "trials", "min_margin", "violations", "max_ratio", "seed")


@dataclass(frozen=True)
class Link:
    """One asserted inequality ``lhs <= rhs``; ``margin`` is lambda_min(rhs - lhs)."""

    name: str
    margin: float
    scale: float = 1.0

    @property
    def relative(self) -> float:
        return self.margin / self.scale

    def holds(self, tol: float = ORDER_TOL) -> bool:
        return self.margin >= -tol * self.scale


@dataclass
class CheckReport:
    theorem: str
    n: int
    alpha: float
    seed: int
    params: dict = field(default_factory=dict)
    links: list[Link] = field(default_factory=list)
    tol: float = ORDER_TOL
    ratio: float | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.reason is None and all(k.holds(self.tol) for k in self.links)

    @property
    def min_margin(self) -> float:
        """Smallest margin relative to its scale (``-inf`` for a failed kernel)."""
        if self.reason is not None:
            return -math.inf
        return min((k.relative for k in self.links), default=math.inf)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "alpha": self.alpha,
            "seed": self.seed,
            "params": self.params,
            "margins": [
                {"name": k.name, "margin": k.margin, "scale": k.scale} for k in self.links
            ],
            "pass": self.passed,
            "tolerance": self.tol,
            "ratio": self.ratio,
            "reason": self.reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, allow_nan=True)


@dataclass
class Summary:
    theorem: str
    n: str
    alpha: float
    trials: int
    min_margin: float
    violations: int
    max_ratio: float | None
    seed: int
    errors: int = 0

    def row(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "alpha": repr(self.alpha),
            "trials": self.trials,
            "min_margin": repr(self.min_margin),
            "violations": self.violations,
            "max_ratio": "" if self.max_ratio is None else repr(self.max_ratio),
            "seed": self.seed,
        }


def summarize(theorem: str, alpha: float, seed: int, reports, n_label: str = "2-6") -> Summary:
    reports = list(reports)
    ratios = [r.ratio for r in reports if r.ratio is not None]
    return Summary(
        theorem=theorem,
        n=n_label,
        alpha=alpha,
        trials=len(reports),
        min_margin=min((r.min_margin for r in reports), default=math.inf),
        violations=sum(not r.passed for r in reports),
        max_ratio=max(ratios) if ratios else None,
        seed=seed,
        errors=sum(r.reason is not None for r in reports),
    )


def to_jsonl(reports) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def to_csv(summaries) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for s in summaries:
        writer.writerow(s.row())
    return buf.getvalue()

"""Executable inequalities for sectorial matrices, with margin reporting."""

from accretive.verify.registry import REGISTRY, SPECIALIZATION_IDS, THEOREM_IDS
from accretive.verify.runner import ALPHA_GRID, fuzz, resolve_ids, run_check, sharpness

__all__ = [
    "ALPHA_GRID",
    "REGISTRY",
    "SPECIALIZATION_IDS",
    "THEOREM_IDS",
    "fuzz",
    "resolve_ids",
    "run_check",
    "sharpness",
]

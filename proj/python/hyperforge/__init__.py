"""Finite hyperstructures: ideals, regularity classes, filters, congruences."""

from ._core import (
    HyperforgeError,
    Structure,
    enumerate,
    run_cli,
    sample,
    search_p85,
    theorem_ids,
)

__all__ = [
    "HyperforgeError",
    "Structure",
    "enumerate",
    "run_cli",
    "sample",
    "search_p85",
    "theorem_ids",
]

"""
Search limits threaded through the exact solvers and the minor enumerator
"""
from dataclasses import dataclass, replace
from typing import Optional

from config.settings import (
    EXACT_MIS_CAP, EXACT_COLORING_CAP, EXACT_BANDWIDTH_CAP, EXACT_CCW_CAP,
    EXACT_SEPARATOR_CAP, EXACT_BICLIQUE_CAP, ORIENTATION_CAP,
    MAX_MODELS, MAX_SECONDS
)

from src.errors import GraphValidationError


@dataclass(frozen=True)
class SearchCaps:
    """
    Caps for one computation. Defaults come from config/settings.py

    max_models and max_seconds bound the shallow-minor enumeration; when either
    trips, results are flagged as bounds instead of exact values.
    """
    max_models: int = MAX_MODELS
    max_seconds: Optional[float] = MAX_SECONDS
    mis: int = EXACT_MIS_CAP
    coloring: int = EXACT_COLORING_CAP
    bandwidth: int = EXACT_BANDWIDTH_CAP
    ccw: int = EXACT_CCW_CAP
    separator: int = EXACT_SEPARATOR_CAP
    biclique: int = EXACT_BICLIQUE_CAP
    orientation: int = ORIENTATION_CAP

    def __post_init__(self):
        if self.max_models < 1:
            raise GraphValidationError(f"model cap must be at least 1, got {self.max_models}")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise GraphValidationError(f"time cap must be positive, got {self.max_seconds}")

    def with_overrides(self, **overrides) -> "SearchCaps":
        """Return a copy with the non-None overrides applied"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_CAPS = SearchCaps()

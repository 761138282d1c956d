"""
Threshold bundle shared by the pattern miners.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from config import Config
from database.transaction_db import as_fraction
from errors import MiningParameterError, UnknownMeasureError
from measures.registry import resolve_measure


@dataclass(frozen=True)
class MiningParams:
    """
    Mining thresholds.

    Attributes:
        minisupport: Frequent-pattern support threshold.
        min_correlation: Correlation (lift) threshold.
        t_s: Itempair support threshold; rare pairs have support below it.
        t_f: Mediator support threshold.
        t_d: Mediator dependence threshold.
        max_pattern_len: Longest pattern the levelwise miners produce. None
            leaves frequent mining unbounded and the correlation miners
            at DEFAULT_MAX_LEN.
        max_mediator_len: Longest mediator set for indirect association.
        min_side: Smallest side of a bi-clique.
        dependence_measure: Measure behind d(P, Q).
        include_pairs: Admit two-item unexpected-correlation patterns.
    """

    minisupport: object = 0.1
    min_correlation: object = 1.0
    t_s: object = 0.1
    t_f: object = 0.2
    t_d: object = 1.0
    max_pattern_len: Optional[int] = None
    max_mediator_len: int = field(default_factory=lambda: Config.DEFAULT_MAX_MEDIATOR_LEN)
    min_side: int = field(default_factory=lambda: Config.DEFAULT_MIN_SIDE)
    dependence_measure: str = field(default_factory=lambda: Config.DEFAULT_DEPENDENCE_MEASURE)
    include_pairs: bool = False

    def validate(self) -> "MiningParams":
        """
        Check threshold ranges.

        Raises:
            MiningParameterError: If any threshold is negative, t_s >= t_f,
                a length is below 1, or the dependence measure is unknown.
        """
        for name in ("minisupport", "min_correlation", "t_s", "t_f", "t_d"):
            if as_fraction(getattr(self, name)) < 0:
                raise MiningParameterError(f"{name} must not be negative")
        if as_fraction(self.t_s) >= as_fraction(self.t_f):
            raise MiningParameterError("t_s must be smaller than t_f")
        for name in ("max_pattern_len", "max_mediator_len", "min_side"):
            if getattr(self, name) is not None and getattr(self, name) < 1:
                raise MiningParameterError(f"{name} must be at least 1")
        try:
            resolve_measure(self.dependence_measure)
        except UnknownMeasureError as exc:
            raise MiningParameterError(str(exc)) from exc
        return self

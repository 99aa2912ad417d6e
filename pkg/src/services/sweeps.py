"""
Werner-state and GAD-surface sweep rows
"""

import logging
from typing import Iterable, List, Optional

import numpy as np

from src.core.exceptions import DomainError
from src.models.measurement import WeakStrength
from src.models.report import GadRow, WernerRow
from src.models.state import WernerParams
from src.services.channels import gad_maximal_holevo_werner, gad_weak_maximal_holevo_werner
from src.services.correlations import (
    classical_correlation,
    discord_bell_diagonal,
    eof_werner,
    super_discord_bell_diagonal,
    weak_maximal_holevo,
)
from src.services.scheduler import SweepScheduler

logger = logging.getLogger(__name__)


def grid_from_spec(start: float, stop: float, count: int) -> np.ndarray:
    """Inclusive linspace; rejects empty or reversed grids"""
    if count < 1 or stop < start:
        raise DomainError(f"malformed grid {start}:{stop}:{count}")
    return np.linspace(start, stop, int(count))


def _strengths(x_values: Iterable[float]) -> List[WeakStrength]:
    return [WeakStrength(x) for x in sorted(set(float(v) for v in x_values))]


def werner_rows(
    z_values: Iterable[float],
    x_values: Iterable[float],
    scheduler: Optional[SweepScheduler] = None,
) -> List[WernerRow]:
    """Rows ordered by (z, x)"""
    strengths = _strengths(x_values)
    z_sorted = sorted(float(z) for z in z_values)
    if z_sorted and not (0.0 <= z_sorted[0] and z_sorted[-1] <= 1.0):
        raise DomainError("Werner z grid must lie in [0, 1]")

    def rows_for(z):
        params = WernerParams(z)
        c = params.triple()
        eof = eof_werner(params)
        classical = classical_correlation(c)
        discord = discord_bell_diagonal(c)
        return [
            WernerRow(z, x.x, eof, classical, weak_maximal_holevo(c, x), discord,
                      super_discord_bell_diagonal(c, x))
            for x in strengths
        ]

    scheduler = scheduler or SweepScheduler()
    chunks = scheduler.map(rows_for, z_sorted)
    logger.info(f"Werner sweep: {len(z_sorted)} z values x {len(strengths)} strengths")
    return [row for chunk in chunks for row in chunk]


def gad_rows(
    z_values: Iterable[float],
    gamma_values: Iterable[float],
    x_values: Iterable[float],
    scheduler: Optional[SweepScheduler] = None,
) -> List[GadRow]:
    """Rows ordered by (z, gamma, x)"""
    strengths = _strengths(x_values)
    z_sorted = sorted(float(z) for z in z_values)
    gammas = sorted(float(g) for g in gamma_values)
    if z_sorted and not (0.0 <= z_sorted[0] and z_sorted[-1] <= 1.0):
        raise DomainError("GAD z grid must lie in [0, 1]")
    if gammas and not (0.0 < gammas[0] and gammas[-1] < 1.0):
        raise DomainError("GAD gamma grid must lie in (0, 1)")

    def rows_for(z):
        rows = []
        for gamma in gammas:
            nc1 = gad_maximal_holevo_werner(z, gamma)
            for x in strengths:
                rows.append(GadRow(z, gamma, x.x, nc1, gad_weak_maximal_holevo_werner(z, gamma, x)))
        return rows

    scheduler = scheduler or SweepScheduler()
    chunks = scheduler.map(rows_for, z_sorted)
    logger.info(f"GAD surface: {len(z_sorted)} x {len(gammas)} grid, {len(strengths)} strengths")
    return [row for chunk in chunks for row in chunk]

"""
Brute-force extremization of ensemble quantities over measurement directions.

A Fibonacci lattice on the sphere is scanned in one vectorized pass, then the
best few grid points are polished with Nelder-Mead on (polar, azimuth).
"""

import logging
import threading
import warnings
from typing import Callable, Optional

import numpy as np
from cachetools import LRUCache, cached
from scipy.optimize import minimize

from src.core.exceptions import RefinementWarning, ValidationError
from src.models.measurement import MeasurementDirection, angles_to_vector
from src.models.optimizer import Optimum, OptimizerConfig
from src.models.state import CorrelationTriple
from src.services.measurement import ensemble_entropies_batch, holevo_batch

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2
TIE_TOL = 1e-12


def theta(c: CorrelationTriple, z: MeasurementDirection) -> float:
    """|(c1 z1, c2 z2, c3 z3)|, the conditional Bloch length"""
    return float(np.linalg.norm(c.as_array() * z.as_array()))


@cached(LRUCache(maxsize=8), lock=threading.Lock())
def sphere_grid(n: int) -> np.ndarray:
    """n near-uniform unit vectors on a Fibonacci lattice, shape (n, 3), read-only"""
    if n < 1:
        raise ValidationError(f"sphere grid needs n >= 1, got {n}")
    t = np.arange(n) + 0.5
    azimuth = 2 * np.pi * np.modf(t / GOLDEN_RATIO)[0]
    polar = np.arccos(1 - 2 * t / n)
    grid = np.stack(
        [np.cos(azimuth) * np.sin(polar), np.sin(azimuth) * np.sin(polar), np.cos(polar)],
        axis=1,
    )
    grid.flags.writeable = False
    logger.debug(f"Built Fibonacci sphere grid with {n} points")
    return grid


def _tie_break(grid: np.ndarray, scores: np.ndarray) -> int:
    """Among near-best points pick the lexicographically largest (z3, z2, z1)"""
    candidates = np.flatnonzero(scores >= scores.max() - TIE_TOL)
    order = np.lexsort((grid[candidates, 0], grid[candidates, 1], grid[candidates, 2]))
    return int(candidates[order[-1]])


def _extremize(
    c: CorrelationTriple,
    cfg: OptimizerConfig,
    score_batch: Callable[[np.ndarray], np.ndarray],
) -> tuple:
    """Maximize score_batch over the sphere; returns (score, direction, converged, nfev)"""
    grid = sphere_grid(cfg.grid_points)
    scores = score_batch(grid)
    best_index = _tie_break(grid, scores)
    best_score = float(scores[best_index])
    best_direction = grid[best_index]

    spacing = np.sqrt(4 * np.pi / cfg.grid_points)
    starts = np.argsort(-scores, kind="stable")[: cfg.restarts]
    converged = True
    evaluations = cfg.grid_points

    def objective(angles):
        return -float(score_batch(angles_to_vector(*angles)[None, :])[0])

    for index in starts:
        start = MeasurementDirection.from_array(grid[index]).angles()
        simplex = np.array([start, (start[0] + spacing, start[1]), (start[0], start[1] + spacing)])
        result = minimize(
            objective,
            x0=np.array(start),
            method="Nelder-Mead",
            options=dict(
                maxiter=cfg.refine_iters,
                # objective is quadratic at the optimum, so the angle only needs √tol
                xatol=np.sqrt(cfg.refine_tol),
                fatol=cfg.refine_tol,
                initial_simplex=simplex,
            ),
        )
        evaluations += result.nfev
        if not result.success:
            converged = False
            logger.debug(f"Refinement from grid point {index} stopped: {result.message}")
        refined_score = -float(result.fun)
        if refined_score > best_score + TIE_TOL:
            best_score = refined_score
            best_direction = angles_to_vector(*result.x)

    if not converged:
        message = (
            f"Nelder-Mead refinement did not converge for {c.as_tuple()} ({cfg.family}); "
            f"returning best value found {best_score!r}"
        )
        logger.warning(message)
        warnings.warn(message, RefinementWarning, stacklevel=3)

    direction = MeasurementDirection.normalized(best_direction)
    return best_score, direction, converged, evaluations


def _require(c: CorrelationTriple, allow_unphysical: bool):
    if not allow_unphysical:
        c.require_physical()


def maximize_holevo_numeric(
    c: CorrelationTriple,
    cfg: Optional[OptimizerConfig] = None,
    allow_unphysical: bool = False,
) -> Optimum:
    """max over directions of S(Σ p ρ) - Σ p S(ρ) for the chosen measurement family"""
    cfg = cfg or OptimizerConfig()
    _require(c, allow_unphysical)
    strength = cfg.strength

    def score_batch(directions):
        return holevo_batch(c, directions, strength)

    value, direction, converged, evaluations = _extremize(c, cfg, score_batch)
    return Optimum(value, direction, theta(c, direction), converged, evaluations)


def minimize_conditional_entropy_numeric(
    c: CorrelationTriple,
    cfg: Optional[OptimizerConfig] = None,
    allow_unphysical: bool = False,
) -> Optimum:
    """min over directions of Σ p S(ρA|i) for the chosen measurement family"""
    cfg = cfg or OptimizerConfig()
    _require(c, allow_unphysical)
    strength = cfg.strength

    def score_batch(directions):
        return -ensemble_entropies_batch(c, directions, strength)[1]

    score, direction, converged, evaluations = _extremize(c, cfg, score_batch)
    return Optimum(-score, direction, theta(c, direction), converged, evaluations)

from dataclasses import dataclass
from typing import Optional

from src.core.exceptions import ValidationError
from src.models.measurement import MeasurementDirection, WeakStrength

MIN_GRID_POINTS = 1000


@dataclass(frozen=True)
class OptimizerConfig:
    """Grid search plus Nelder-Mead refinement settings.

    ``weak`` selects the measurement family: None means projective.
    """
    grid_points: int = 20000
    refine_iters: int = 200
    refine_tol: float = 1e-10
    restarts: int = 5
    weak: Optional[WeakStrength] = None

    def __post_init__(self):
        if self.grid_points < MIN_GRID_POINTS:
            raise ValidationError(f"grid_points must be >= {MIN_GRID_POINTS}, got {self.grid_points}")
        if self.refine_iters < 1:
            raise ValidationError(f"refine_iters must be >= 1, got {self.refine_iters}")
        if not self.refine_tol > 0:
            raise ValidationError(f"refine_tol must be positive, got {self.refine_tol}")
        if self.restarts < 1:
            raise ValidationError(f"restarts must be >= 1, got {self.restarts}")

    @property
    def strength(self) -> float:
        return 1.0 if self.weak is None else self.weak.s

    @property
    def family(self) -> str:
        return "projective" if self.weak is None else f"weak(x={self.weak.x:g})"


@dataclass(frozen=True)
class Optimum:
    value: float
    direction: MeasurementDirection
    theta_at_optimum: float
    converged: bool = True
    evaluations: int = 0

"""
Measurement value objects on subsystem B
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from src.core.exceptions import ValidationError
from src.models.state import DensityMatrix

NORM_TOL = 1e-12
PROBABILITY_TOL = 1e-12

PROJECTIVE = "projective"
WEAK = "weak"


@dataclass(frozen=True)
class UnitaryParams:
    """V = t I + i y·σ with t² + |y|² = 1"""
    t: float
    y1: float
    y2: float
    y3: float

    def __post_init__(self):
        norm = self.t ** 2 + self.y1 ** 2 + self.y2 ** 2 + self.y3 ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"unitary parameters must satisfy t²+|y|²=1, got {norm!r}")

    @classmethod
    def normalized(cls, t, y1, y2, y3) -> "UnitaryParams":
        norm = math.sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3)
        if norm == 0.0:
            raise ValidationError("cannot normalize the zero quaternion")
        return cls(t / norm, y1 / norm, y2 / norm, y3 / norm)


@dataclass(frozen=True)
class MeasurementDirection:
    """Unit vector z; the projective measurement is {½(I ± z·σ)}"""
    z1: float
    z2: float
    z3: float

    def __post_init__(self):
        norm = self.z1 ** 2 + self.z2 ** 2 + self.z3 ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"measurement direction must be a unit vector, |z|²={norm!r}")

    @classmethod
    def from_array(cls, z) -> "MeasurementDirection":
        z1, z2, z3 = (float(v) for v in z)
        return cls(z1, z2, z3)

    @classmethod
    def normalized(cls, z) -> "MeasurementDirection":
        z = np.asarray(z, dtype=float)
        norm = float(np.linalg.norm(z))
        if norm == 0.0:
            raise ValidationError("cannot normalize the zero vector")
        return cls.from_array(z / norm)

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2, self.z3], dtype=float)

    def angles(self) -> Tuple[float, float]:
        polar = math.acos(max(-1.0, min(1.0, self.z3)))
        azimuth = math.atan2(self.z2, self.z1)
        return polar, azimuth


def angles_to_vector(polar, azimuth) -> np.ndarray:
    sin_polar = np.sin(polar)
    return np.array([sin_polar * np.cos(azimuth), sin_polar * np.sin(azimuth), np.cos(polar)])


@dataclass(frozen=True)
class WeakStrength:
    """Weak measurement strength x > 0; s = tanh x"""
    x: float
    saturated: bool = False

    def __post_init__(self):
        if not math.isfinite(self.x) or self.x <= 0.0:
            raise ValidationError(f"weak strength x must be finite and positive, got {self.x}")
        object.__setattr__(self, "x", float(self.x))

    @property
    def s(self) -> float:
        return math.tanh(self.x)


@dataclass(frozen=True, eq=False)
class MeasuredEnsemble:
    """Outcome probabilities with conditional states of A"""
    probabilities: Tuple[float, ...]
    states: Tuple[DensityMatrix, ...] = field(repr=False)
    label: str = PROJECTIVE

    def __post_init__(self):
        probabilities = tuple(float(p) for p in self.probabilities)
        states = tuple(self.states)
        if len(probabilities) != len(states) or not probabilities:
            raise ValidationError("ensemble needs one state per outcome probability")
        if min(probabilities) < -PROBABILITY_TOL:
            raise ValidationError(f"negative outcome probability in {probabilities}")
        if abs(sum(probabilities) - 1.0) > PROBABILITY_TOL:
            raise ValidationError(f"outcome probabilities sum to {sum(probabilities)!r}")
        if self.label not in (PROJECTIVE, WEAK):
            raise ValidationError(f"unknown ensemble label {self.label!r}")
        object.__setattr__(self, "probabilities", probabilities)
        object.__setattr__(self, "states", states)

    @property
    def outcomes(self):
        return list(zip(self.probabilities, self.states))

    def average_state(self) -> DensityMatrix:
        return DensityMatrix(sum(p * s.matrix for p, s in self.outcomes))

    def __len__(self):
        return len(self.probabilities)

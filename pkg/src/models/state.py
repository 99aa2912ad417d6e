"""
State value objects: correlation triples, density matrices, Werner parameters
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from src.core.exceptions import PhysicalityError, ValidationError

PHYSICAL_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def _frozen_copy(array, dtype):
    out = np.array(array, dtype=dtype, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class CorrelationTriple:
    """(c1, c2, c3) of a Bell-diagonal state: rho = (I⊗I + Σ ci σi⊗σi) / 4"""
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value}")
            if abs(value) > 1.0 + PHYSICAL_TOL:
                raise ValidationError(f"{name} must lie in [-1, 1], got {value}")
            object.__setattr__(self, name, float(value))

    @classmethod
    def from_sequence(cls, values) -> "CorrelationTriple":
        values = tuple(values)
        if len(values) != 3:
            raise ValidationError(f"expected three correlation values, got {len(values)}")
        return cls(*values)

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3], dtype=float)

    def scaled(self, factor: float) -> "CorrelationTriple":
        return CorrelationTriple(self.c1 * factor, self.c2 * factor, self.c3 * factor)

    def bell_eigenvalues(self) -> Tuple[float, float, float, float]:
        c1, c2, c3 = self.c1, self.c2, self.c3
        return (
            0.25 * (1 - c1 - c2 - c3),
            0.25 * (1 - c1 + c2 + c3),
            0.25 * (1 + c1 - c2 + c3),
            0.25 * (1 + c1 + c2 - c3),
        )

    @property
    def is_physical(self) -> bool:
        return min(self.bell_eigenvalues()) >= -PHYSICAL_TOL

    def require_physical(self) -> "CorrelationTriple":
        if not self.is_physical:
            raise PhysicalityError(self.as_tuple(), self.bell_eigenvalues())
        return self

    @property
    def is_werner(self) -> bool:
        return self.c1 == self.c2 == self.c3 and self.is_physical

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive 2x2 or 4x4 matrix (read-only)"""
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = _frozen_copy(self.matrix, np.complex128)
        if m.shape not in ((2, 2), (4, 4)):
            raise ValidationError(f"density matrix must be 2x2 or 4x4, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise ValidationError("density matrix is not Hermitian")
        trace = np.trace(m).real
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValidationError(f"density matrix trace is {trace!r}, expected 1")
        lowest = float(np.linalg.eigvalsh(m)[0])
        if lowest < -POSITIVITY_TOL:
            raise ValidationError(f"density matrix has negative eigenvalue {lowest:.3g}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def unchecked(cls, matrix) -> "DensityMatrix":
        """Wrap a matrix without validation (allow-unphysical exploration only)"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "matrix", _frozen_copy(matrix, np.complex128))
        return obj

    @classmethod
    def from_bloch(cls, r) -> "DensityMatrix":
        r1, r2, r3 = (float(v) for v in r)
        return cls(0.5 * (IDENTITY + r1 * SIGMA_X + r2 * SIGMA_Y + r3 * SIGMA_Z))

    @classmethod
    def maximally_mixed(cls, dim: int = 2) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Ascending spectrum, clamped at zero"""
        return np.clip(np.linalg.eigvalsh(self.matrix), 0.0, None)

    def bloch_vector(self) -> np.ndarray:
        if self.dim != 2:
            raise ValidationError("Bloch vector is defined for qubit states only")
        return np.array([np.trace(self.matrix @ s).real for s in PAULIS])

    def __repr__(self):
        return f"<DensityMatrix dim={self.dim}>"


@dataclass(frozen=True)
class WernerParams:
    """Werner state by singlet weight z; alpha = 2z / (1 + z).

    The physical family is z in [-1/3, 1], the image of alpha in [-1, 1];
    the singlet-plus-white-noise reading needs z in [0, 1].
    """
    z: float

    def __post_init__(self):
        if not -1.0 / 3.0 - PHYSICAL_TOL <= self.z <= 1.0:
            raise ValidationError(f"Werner z must lie in [-1/3, 1], got {self.z}")
        object.__setattr__(self, "z", float(self.z))

    @classmethod
    def from_alpha(cls, alpha: float) -> "WernerParams":
        if not -1.0 <= alpha <= 1.0:
            raise ValidationError(f"Werner alpha must lie in [-1, 1], got {alpha}")
        return cls(alpha / (2.0 - alpha))

    @property
    def alpha(self) -> float:
        return 2.0 * self.z / (1.0 + self.z)

    def triple(self) -> CorrelationTriple:
        return CorrelationTriple(-self.z, -self.z, -self.z)

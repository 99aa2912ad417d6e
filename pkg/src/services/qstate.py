"""
Two-qubit Bell-diagonal and Werner states: construction, spectra, entropies
"""

import logging
from typing import Tuple, Union

import numpy as np
from scipy.special import entr

from src.core.exceptions import ValidationError
from src.models.state import (
    IDENTITY,
    PAULIS,
    CorrelationTriple,
    DensityMatrix,
    WernerParams,
)

logger = logging.getLogger(__name__)

LN2 = np.log(2.0)
BELL_DIAGONAL_TOL = 1e-12

# σi⊗σi for i = 1, 2, 3
PAULI_PAIRS = tuple(np.kron(s, s) for s in PAULIS)
SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]],
    dtype=np.complex128,
)


def shannon_entropy(probabilities) -> float:
    """-Σ p log2 p with 0 log 0 = 0; tiny negatives from rounding are clamped"""
    p = np.clip(np.asarray(probabilities, dtype=float), 0.0, None)
    return float(np.sum(entr(p)) / LN2)


def bell_diagonal_matrix(c: CorrelationTriple) -> np.ndarray:
    rho = np.kron(IDENTITY, IDENTITY)
    for ci, pair in zip(c, PAULI_PAIRS):
        rho = rho + ci * pair
    return rho / 4.0


def bell_diagonal(c: CorrelationTriple, allow_unphysical: bool = False) -> DensityMatrix:
    """¼(I⊗I + Σ ci σi⊗σi)"""
    if allow_unphysical and not c.is_physical:
        logger.debug(f"Building unphysical Bell-diagonal matrix for {c.as_tuple()}")
        return DensityMatrix.unchecked(bell_diagonal_matrix(c))
    c.require_physical()
    return DensityMatrix(bell_diagonal_matrix(c))


def bell_eigenvalues(c: CorrelationTriple) -> Tuple[float, float, float, float]:
    return c.bell_eigenvalues()


def werner_state(params: WernerParams) -> DensityMatrix:
    return bell_diagonal(params.triple())


def werner_state_alpha(alpha: float) -> DensityMatrix:
    """(I - alpha·SWAP) / (2(2 - alpha)), the swap-operator form"""
    WernerParams.from_alpha(alpha)
    return DensityMatrix((np.eye(4) - alpha * SWAP) / (2.0 * (2.0 - alpha)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    return shannon_entropy(rho.eigenvalues())


def mutual_information(c: CorrelationTriple, allow_unphysical: bool = False) -> float:
    """S(ρA) + S(ρB) - S(ρAB) = 2 - S(ρAB); both marginals are I/2"""
    if not allow_unphysical:
        c.require_physical()
    return 2.0 - shannon_entropy(bell_eigenvalues(c))


def reduced_state(rho: DensityMatrix, subsystem: str = "A") -> DensityMatrix:
    """Partial trace keeping ``subsystem`` of a two-qubit state"""
    if rho.dim != 4:
        raise ValidationError(f"reduced_state needs a two-qubit state, got dim {rho.dim}")
    tensor = rho.matrix.reshape(2, 2, 2, 2)
    if subsystem == "A":
        reduced = np.trace(tensor, axis1=1, axis2=3)
    elif subsystem == "B":
        reduced = np.trace(tensor, axis1=0, axis2=2)
    else:
        raise ValidationError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return DensityMatrix(reduced)


def trace_distance(rho: Union[DensityMatrix, np.ndarray], sigma: Union[DensityMatrix, np.ndarray]) -> float:
    a = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    b = sigma.matrix if isinstance(sigma, DensityMatrix) else np.asarray(sigma)
    if a.shape != b.shape:
        raise ValidationError(f"trace distance needs equal dimensions, got {a.shape} and {b.shape}")
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a - b))))


def correlation_readback(rho: Union[DensityMatrix, np.ndarray]) -> CorrelationTriple:
    """ci = tr(ρ σi⊗σi)"""
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    values = [np.trace(m @ pair).real for pair in PAULI_PAIRS]
    return CorrelationTriple(*np.clip(values, -1.0, 1.0))


def random_physical_triple(rng: np.random.Generator) -> CorrelationTriple:
    """Uniform sample of the Bell tetrahedron by rejection from [-1, 1]^3"""
    while True:
        c = CorrelationTriple(*rng.uniform(-1.0, 1.0, size=3))
        if c.is_physical:
            return c


def is_bell_diagonal(rho: DensityMatrix, tol: float = BELL_DIAGONAL_TOL) -> bool:
    if rho.dim != 4:
        return False
    c = correlation_readback(rho)
    return float(np.max(np.abs(rho.matrix - bell_diagonal_matrix(c)))) <= tol

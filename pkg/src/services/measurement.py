"""
Local measurements on qubit B and the ensembles they prepare on A.

Projective measurements along a unit direction z use {½(I + z·σ), ½(I - z·σ)};
weak measurements use P(±x) built from the same pair. Closed-form ensembles
for Bell-diagonal inputs are produced from conditional Bloch vectors, and the
explicit_* functions apply the operators to a full 4x4 state instead.
"""

import itertools
import logging
from typing import Sequence, Tuple

import numpy as np
from scipy.special import entr

from src.models.measurement import (
    PROJECTIVE,
    WEAK,
    MeasuredEnsemble,
    MeasurementDirection,
    UnitaryParams,
    WeakStrength,
)
from src.models.state import IDENTITY, PAULIS, CorrelationTriple, DensityMatrix
from src.services.qstate import LN2, reduced_state, trace_distance, von_neumann_entropy

logger = logging.getLogger(__name__)

ZERO_PROBABILITY = 1e-15
BASIS_PROJECTORS = (
    np.array([[1, 0], [0, 0]], dtype=np.complex128),
    np.array([[0, 0], [0, 1]], dtype=np.complex128),
)


def direction_from_unitary(u: UnitaryParams) -> MeasurementDirection:
    t, y1, y2, y3 = u.t, u.y1, u.y2, u.y3
    return MeasurementDirection(
        2.0 * (-t * y2 + y1 * y3),
        2.0 * (t * y1 + y2 * y3),
        t * t + y3 * y3 - y1 * y1 - y2 * y2,
    )


def unitary_from_params(u: UnitaryParams) -> np.ndarray:
    """V = t I + i (y1 σ1 + y2 σ2 + y3 σ3)"""
    return u.t * IDENTITY + 1j * (u.y1 * PAULIS[0] + u.y2 * PAULIS[1] + u.y3 * PAULIS[2])


def projectors_from_unitary(u: UnitaryParams) -> Tuple[np.ndarray, np.ndarray]:
    """B_k = V Π_k V† with Π_k = |k><k|"""
    v = unitary_from_params(u)
    return tuple(v @ proj @ v.conj().T for proj in BASIS_PROJECTORS)


def pauli_dot(z) -> np.ndarray:
    z1, z2, z3 = z
    return z1 * PAULIS[0] + z2 * PAULIS[1] + z3 * PAULIS[2]


def direction_projectors(z: MeasurementDirection) -> Tuple[np.ndarray, np.ndarray]:
    """Π0, Π1 = ½(I ± z·σ)"""
    zs = pauli_dot(z.as_array())
    return 0.5 * (IDENTITY + zs), 0.5 * (IDENTITY - zs)


def weak_operators(x: WeakStrength, z: MeasurementDirection) -> Tuple[np.ndarray, np.ndarray]:
    """(P(x), P(-x)) with P(x) = √((1-s)/2) Π0 + √((1+s)/2) Π1, s = tanh x"""
    s = x.s
    pi0, pi1 = direction_projectors(z)
    lo = np.sqrt(max(0.0, (1.0 - s) / 2.0))
    hi = np.sqrt((1.0 + s) / 2.0)
    return lo * pi0 + hi * pi1, hi * pi0 + lo * pi1


def conditional_bloch_vectors(c: CorrelationTriple, directions, strength: float = 1.0) -> np.ndarray:
    """strength · (c1 z1, c2 z2, c3 z3) for one direction or an (n, 3) stack"""
    return strength * c.as_array() * np.asarray(directions, dtype=float)


def _bloch_pair_ensemble(bloch, signs, label) -> MeasuredEnsemble:
    states = tuple(DensityMatrix.from_bloch(sign * bloch) for sign in signs)
    return MeasuredEnsemble((0.5, 0.5), states, label)


def projective_ensemble(c: CorrelationTriple, z: MeasurementDirection) -> MeasuredEnsemble:
    """Outcome 0 carries +(c∘z), outcome 1 carries -(c∘z); p0 = p1 = ½"""
    c.require_physical()
    return _bloch_pair_ensemble(conditional_bloch_vectors(c, z.as_array()), (1.0, -1.0), PROJECTIVE)


def weak_ensemble(c: CorrelationTriple, z: MeasurementDirection, x: WeakStrength) -> MeasuredEnsemble:
    """Outcome +x carries -tanh x (c∘z), outcome -x carries +tanh x (c∘z)"""
    c.require_physical()
    return _bloch_pair_ensemble(conditional_bloch_vectors(c, z.as_array(), x.s), (-1.0, 1.0), WEAK)


def explicit_ensemble(rho: DensityMatrix, operators: Sequence[np.ndarray], label: str = PROJECTIVE) -> MeasuredEnsemble:
    """Apply I⊗K for each operator K to a two-qubit state and trace out B"""
    probabilities, states = [], []
    for op in operators:
        full = np.kron(IDENTITY, op)
        unnormalized = full @ rho.matrix @ full.conj().T
        p = float(np.trace(unnormalized).real)
        if p <= ZERO_PROBABILITY:
            logger.debug("Outcome with vanishing probability; using I/2 as placeholder state")
            probabilities.append(max(p, 0.0))
            states.append(DensityMatrix.maximally_mixed(2))
            continue
        probabilities.append(p)
        states.append(reduced_state(DensityMatrix(unnormalized / p), "A"))
    return MeasuredEnsemble(tuple(probabilities), tuple(states), label)


def explicit_projective_ensemble(rho: DensityMatrix, u: UnitaryParams) -> MeasuredEnsemble:
    return explicit_ensemble(rho, projectors_from_unitary(u), PROJECTIVE)


def explicit_weak_ensemble(rho: DensityMatrix, z: MeasurementDirection, x: WeakStrength) -> MeasuredEnsemble:
    return explicit_ensemble(rho, weak_operators(x, z), WEAK)


def conditional_entropy(e: MeasuredEnsemble) -> float:
    """Σ p_i S(ρ_A|i)"""
    return float(sum(p * von_neumann_entropy(state) for p, state in e.outcomes))


def holevo_of_ensemble(e: MeasuredEnsemble) -> float:
    """S(Σ p_i ρ_i) - Σ p_i S(ρ_i)"""
    return von_neumann_entropy(e.average_state()) - conditional_entropy(e)


def ensemble_distance(first: MeasuredEnsemble, second: MeasuredEnsemble) -> Tuple[float, float]:
    """Match outcomes up to relabeling; return (max trace distance, max |Δp|)"""
    if len(first) != len(second):
        return float("inf"), float("inf")
    best = None
    for order in itertools.permutations(range(len(second))):
        pairs = [(first.outcomes[i], second.outcomes[j]) for i, j in enumerate(order)]
        distance = max(trace_distance(a[1], b[1]) for a, b in pairs)
        probability_gap = max(abs(a[0] - b[0]) for a, b in pairs)
        total = sum(trace_distance(a[1], b[1]) for a, b in pairs)
        if best is None or total < best[0]:
            best = (total, distance, probability_gap)
    return best[1], best[2]


def _stacked_states(bloch) -> np.ndarray:
    """(n, 3) Bloch vectors -> (n, 2, 2) density matrices"""
    bloch = np.atleast_2d(bloch)
    return 0.5 * (IDENTITY + np.einsum("nk,kij->nij", bloch, np.stack(PAULIS)))


def _stacked_entropy(states) -> np.ndarray:
    spectra = np.clip(np.linalg.eigvalsh(states), 0.0, None)
    return np.sum(entr(spectra), axis=-1) / LN2


def ensemble_entropies_batch(c: CorrelationTriple, directions, strength: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Average-state entropy and conditional entropy for a stack of directions.

    Each direction prepares the two-outcome ensemble {½, ½(I ± r·σ)} with
    r = strength·(c∘z); entropies come from the stacked 2x2 spectra.
    """
    bloch = np.atleast_2d(conditional_bloch_vectors(c, directions, strength))
    plus = _stacked_states(bloch)
    minus = _stacked_states(-bloch)
    average = 0.5 * (plus + minus)
    conditional = 0.5 * _stacked_entropy(plus) + 0.5 * _stacked_entropy(minus)
    return _stacked_entropy(average), conditional


def holevo_batch(c: CorrelationTriple, directions, strength: float = 1.0) -> np.ndarray:
    average_entropy, conditional = ensemble_entropies_batch(c, directions, strength)
    return average_entropy - conditional

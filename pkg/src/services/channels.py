"""
Decoherence channels on two-qubit states.

Kraus sets are applied explicitly to 4x4 matrices; for Bell-diagonal inputs
the same channels are also available as closed-form maps of (c1, c2, c3).
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.core.config import DEFAULT_MAX_X
from src.core.exceptions import DomainError
from src.models.channel import GAD_CLOSED_FORM_P, ChannelKind, ChannelSpec
from src.models.measurement import MeasuredEnsemble, MeasurementDirection, WeakStrength
from src.models.report import MeasureReport
from src.models.state import IDENTITY, PAULIS, CorrelationTriple, DensityMatrix, WernerParams
from src.services.correlations import build_report, holevo_closed_form
from src.services.measurement import ensemble_distance, projective_ensemble, weak_ensemble
from src.services.qstate import bell_diagonal, correlation_readback

logger = logging.getLogger(__name__)

SIGMA_X, SIGMA_Y, SIGMA_Z = PAULIS
NOISE_P_MAX = 0.75


def kraus_set(spec: ChannelSpec) -> List[np.ndarray]:
    p = spec.p
    if spec.kind in (ChannelKind.BF, ChannelKind.PF, ChannelKind.BPF):
        flip = {ChannelKind.BF: SIGMA_X, ChannelKind.PF: SIGMA_Z, ChannelKind.BPF: SIGMA_Y}[spec.kind]
        return [math.sqrt(1 - p / 2) * IDENTITY, math.sqrt(p / 2) * flip]

    if spec.kind is ChannelKind.GAD:
        g = spec.gamma
        return [
            math.sqrt(p) * np.array([[1, 0], [0, math.sqrt(1 - g)]], dtype=np.complex128),
            math.sqrt(p) * np.array([[0, math.sqrt(g)], [0, 0]], dtype=np.complex128),
            math.sqrt(1 - p) * np.array([[math.sqrt(1 - g), 0], [0, 1]], dtype=np.complex128),
            math.sqrt(1 - p) * np.array([[0, 0], [math.sqrt(g), 0]], dtype=np.complex128),
        ]

    # DEPOL1: D1 = √(1-p) I, D2..D4 = √(p/3) σ1, σ2, σ3
    weight = math.sqrt(p / 3)
    return [math.sqrt(1 - p) * IDENTITY, weight * SIGMA_X, weight * SIGMA_Y, weight * SIGMA_Z]


def kraus_completeness_error(operators) -> float:
    """max |Σ E†E - I| over entries"""
    total = sum(op.conj().T @ op for op in operators)
    return float(np.max(np.abs(total - np.eye(operators[0].shape[0]))))


def _two_qubit_operators(spec: ChannelSpec) -> List[np.ndarray]:
    ops = kraus_set(spec)
    if spec.kind is ChannelKind.DEPOL1:
        if spec.side == "A":
            return [np.kron(op, IDENTITY) for op in ops]
        return [np.kron(IDENTITY, op) for op in ops]
    return [np.kron(a, b) for a in ops for b in ops]


def apply_two_sided(rho: DensityMatrix, spec: ChannelSpec) -> DensityMatrix:
    """Σ (Ei⊗Ej) ρ (Ei⊗Ej)†; DEPOL1 applies Σ (Di⊗I) ρ (Di⊗I)† on one side"""
    if rho.dim != 4:
        raise DomainError(f"two-qubit channel needs a 4x4 state, got dim {rho.dim}")
    out = sum(k @ rho.matrix @ k.conj().T for k in _two_qubit_operators(spec))
    return DensityMatrix(out)


def transformed_c(c: CorrelationTriple, spec: ChannelSpec) -> CorrelationTriple:
    c1, c2, c3 = c
    if spec.kind is ChannelKind.GAD:
        if spec.p != GAD_CLOSED_FORM_P:
            raise DomainError(f"GAD closed form needs p = 1/2, got p = {spec.p}")
        g = 1 - spec.gamma
        return CorrelationTriple(c1 * g, c2 * g, c3 * g * g)

    if spec.kind is ChannelKind.DEPOL1:
        return c.scaled(1 - 4 * spec.p / 3)

    shrink = (1 - spec.p) ** 2
    if spec.kind is ChannelKind.BF:
        return CorrelationTriple(c1, c2 * shrink, c3 * shrink)
    if spec.kind is ChannelKind.PF:
        return CorrelationTriple(c1 * shrink, c2 * shrink, c3)
    return CorrelationTriple(c1 * shrink, c2, c3 * shrink)


def transformed_c_explicit(c: CorrelationTriple, spec: ChannelSpec) -> CorrelationTriple:
    """Kraus application followed by readback of tr(ρ σi⊗σi)"""
    return correlation_readback(apply_two_sided(bell_diagonal(c), spec))


def measures_under_channel(
    c: CorrelationTriple,
    spec: ChannelSpec,
    x: Optional[WeakStrength] = None,
    allow_unphysical: bool = False,
) -> MeasureReport:
    if not allow_unphysical:
        c.require_physical()
    if not spec.has_closed_form:
        raise DomainError(
            f"{spec!r} does not keep the Bell-diagonal form; use apply_two_sided for the raw state"
        )
    after = transformed_c(c, spec)
    logger.debug(f"{spec!r} maps {c.as_tuple()} to {after.as_tuple()}")
    return build_report(after, x, allow_unphysical=allow_unphysical)


def gad_maximal_holevo_werner(z: float, gamma: float) -> float:
    """NC1: maximal Holevo quantity of a Werner state after GAD (p = 1/2)"""
    WernerParams(z)
    return holevo_closed_form(z * (1 - gamma))


def gad_weak_maximal_holevo_werner(z: float, gamma: float, x: WeakStrength) -> float:
    """NC1^w: the weak-measurement counterpart of NC1"""
    WernerParams(z)
    return holevo_closed_form(z * (1 - gamma) * x.s)


def weak_from_noise(p: float, max_x: float = DEFAULT_MAX_X) -> WeakStrength:
    """x with tanh x = 1 - 4p/3; saturates at max_x as p -> 0"""
    if not 0.0 < p < NOISE_P_MAX:
        raise DomainError(f"noise probability must lie in (0, 3/4), got {p}")
    s = 1.0 - 4.0 * p / 3.0
    if s >= math.tanh(max_x):
        logger.warning(f"Noise p={p} gives tanh x={s!r}; saturating x at {max_x}")
        return WeakStrength(max_x, saturated=True)
    return WeakStrength(math.atanh(s))


@dataclass(frozen=True)
class EquivalenceReport:
    max_trace_distance: float
    max_probability_gap: float
    x: WeakStrength
    noisy: MeasuredEnsemble
    weak: MeasuredEnsemble

    def to_dict(self) -> dict:
        return {
            "max_trace_distance": self.max_trace_distance,
            "max_probability_gap": self.max_probability_gap,
            "x": self.x.x,
            "tanh_x": self.x.s,
            "saturated": self.x.saturated,
            "noisy_bloch": [s.bloch_vector().tolist() for s in self.noisy.states],
            "weak_bloch": [s.bloch_vector().tolist() for s in self.weak.states],
        }


def depolarize_then_project_equivalence(
    c: CorrelationTriple,
    z: MeasurementDirection,
    p: float,
    side: str = "A",
    max_x: float = DEFAULT_MAX_X,
) -> EquivalenceReport:
    """Depolarize one qubit, measure B projectively, compare with a weak measurement"""
    x = weak_from_noise(p, max_x)
    noisy_state = apply_two_sided(bell_diagonal(c), ChannelSpec(ChannelKind.DEPOL1, p, side=side))
    noisy = projective_ensemble(correlation_readback(noisy_state), z)
    weak = weak_ensemble(c, z, x)
    distance, gap = ensemble_distance(noisy, weak)
    return EquivalenceReport(distance, gap, x, noisy, weak)

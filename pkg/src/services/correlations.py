"""
Closed-form correlation measures for Bell-diagonal and Werner states.

Every Holevo-type closed form is evaluated as 1 - h((1 + C·s)/2), with
s = 1 for projective and s = tanh x for weak measurements.
"""

import logging
import math
from typing import Optional

from scipy.special import xlogy

from src.core.exceptions import DomainError
from src.models.measurement import WeakStrength
from src.models.report import MeasureReport
from src.models.state import CorrelationTriple, WernerParams
from src.services.qstate import mutual_information

logger = logging.getLogger(__name__)

BINARY_ENTROPY_SLACK = 1e-12


def _log2_term(a, b):
    """a·log2(b), zero when a = 0"""
    return float(xlogy(a, b)) / math.log(2.0)


def binary_entropy(p: float) -> float:
    """h(p) = -p log2 p - (1-p) log2 (1-p)"""
    if not -BINARY_ENTROPY_SLACK <= p <= 1.0 + BINARY_ENTROPY_SLACK:
        raise DomainError(f"binary entropy needs p in [0, 1], got {p}")
    p = min(1.0, max(0.0, p))
    return -_log2_term(p, p) - _log2_term(1.0 - p, 1.0 - p)


def c_max(c: CorrelationTriple) -> float:
    return max(abs(c.c1), abs(c.c2), abs(c.c3))


def holevo_closed_form(effective_c: float) -> float:
    """(1-C)/2 log2(1-C) + (1+C)/2 log2(1+C), written as 1 - h((1+C)/2)"""
    return 1.0 - binary_entropy((1.0 + effective_c) / 2.0)


def maximal_holevo(c: CorrelationTriple) -> float:
    return holevo_closed_form(c_max(c))


def classical_correlation(c: CorrelationTriple) -> float:
    """S(ρA) - min Σ p_i S(ρA|i); equal to the maximal Holevo quantity here"""
    return 1.0 - binary_entropy((1.0 + c_max(c)) / 2.0)


def weak_maximal_holevo(c: CorrelationTriple, x: WeakStrength) -> float:
    return holevo_closed_form(c_max(c) * x.s)


def super_classical_correlation(c: CorrelationTriple, x: WeakStrength) -> float:
    return 1.0 - binary_entropy((1.0 + c_max(c) * x.s) / 2.0)


def discord_bell_diagonal(c: CorrelationTriple, allow_unphysical: bool = False) -> float:
    """I(ρAB) - J_B(ρAB)"""
    return mutual_information(c, allow_unphysical) - classical_correlation(c)


def super_discord_bell_diagonal(c: CorrelationTriple, x: WeakStrength, allow_unphysical: bool = False) -> float:
    """I(ρAB) - J_B^w(ρAB)"""
    return mutual_information(c, allow_unphysical) - super_classical_correlation(c, x)


def werner_discord(z: float) -> float:
    """Discord of a Werner state written directly in z"""
    return (
        _log2_term((1 - z) / 4, 1 - z)
        - _log2_term((1 + z) / 2, 1 + z)
        + _log2_term((1 + 3 * z) / 4, 1 + 3 * z)
    )


def werner_super_discord(z: float, x: WeakStrength) -> float:
    """Super discord of a Werner state written directly in z"""
    zs = z * x.s
    return (
        _log2_term(3 * (1 - z) / 4, (1 - z) / 4)
        + _log2_term((1 + 3 * z) / 4, (1 + 3 * z) / 4)
        + 1.0
        - (_log2_term((1 - zs) / 2, (1 - zs) / 2) + _log2_term((1 + zs) / 2, (1 + zs) / 2))
    )


def werner_concurrence(params: WernerParams) -> float:
    """max(0, (2α-1)/(2-α)), which equals max(0, (3z-1)/2)"""
    alpha = params.alpha
    return max(0.0, (2.0 * alpha - 1.0) / (2.0 - alpha))


def eof_werner(params: WernerParams) -> float:
    tau = min(1.0, werner_concurrence(params))
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - tau * tau)))


def build_report(
    c: CorrelationTriple,
    x: Optional[WeakStrength] = None,
    allow_unphysical: bool = False,
) -> MeasureReport:
    """Assemble every measure for one triple; eof is filled for Werner triples"""
    if not allow_unphysical:
        c.require_physical()

    info = mutual_information(c, allow_unphysical)
    holevo = maximal_holevo(c)
    classical = classical_correlation(c)
    weak_fields = {}
    if x is not None:
        weak_classical = super_classical_correlation(c, x)
        weak_fields = dict(
            x=x.x,
            weak_maximal_holevo=weak_maximal_holevo(c, x),
            super_classical_correlation=weak_classical,
            super_discord=info - weak_classical,
        )

    eof = None
    if c.is_werner:
        eof = eof_werner(WernerParams(-c.c1))

    logger.debug(f"Report for {c.as_tuple()} (x={None if x is None else x.x}) assembled")
    return MeasureReport(
        c=c,
        mutual_information=info,
        maximal_holevo=holevo,
        classical_correlation=classical,
        discord=info - classical,
        eof=eof,
        **weak_fields,
    )

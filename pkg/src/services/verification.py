"""
Verification suites run by the ``verify`` command.

Each suite compares a closed form against an independent computation on
seeded random inputs and records the worst error and the first failing case.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from src.core.exceptions import DomainError
from src.models.channel import ChannelKind, ChannelSpec
from src.models.measurement import MeasurementDirection, WeakStrength
from src.models.optimizer import OptimizerConfig
from src.models.state import CorrelationTriple, WernerParams
from src.services.channels import (
    depolarize_then_project_equivalence,
    kraus_completeness_error,
    kraus_set,
    measures_under_channel,
    transformed_c,
    transformed_c_explicit,
)
from src.services.correlations import c_max, holevo_closed_form
from src.services.measurement import direction_projectors, weak_operators
from src.services.optimizer import maximize_holevo_numeric
from src.services.qstate import random_physical_triple
from src.services.scheduler import SweepScheduler

logger = logging.getLogger(__name__)

ORACLE_TOL = 1e-6
INVARIANCE_TOL = 1e-12
EQUIVALENCE_TOL = 1e-10
KRAUS_TOL = 1e-12
WEAK_LIMIT_TOL = 1e-8
ORACLE_STRENGTHS = (None, 0.25, 1.0, 2.5)
FLIP_AXIS = {ChannelKind.BF: 0, ChannelKind.PF: 2, ChannelKind.BPF: 1}


@dataclass
class SuiteResult:
    name: str
    tolerance: float
    cases: int = 0
    max_error: float = 0.0
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def record(self, error: float, case: Callable[[], dict]):
        self.cases += 1
        self.max_error = max(self.max_error, float(error))
        if self.first_failure is None and not error <= self.tolerance:
            self.first_failure = case()

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "cases": self.cases,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "first_failure": self.first_failure,
        }


def _random_direction(rng) -> MeasurementDirection:
    return MeasurementDirection.normalized(rng.normal(size=3))


def oracle_suite(rng, samples, scheduler, grid_points, fault_scale=1.0) -> SuiteResult:
    suite = SuiteResult("oracle_agreement", ORACLE_TOL)
    triples = [random_physical_triple(rng) for _ in range(samples)]
    jobs = [(c, x) for c in triples for x in ORACLE_STRENGTHS]

    def run(job):
        c, x = job
        weak = None if x is None else WeakStrength(x)
        cfg = OptimizerConfig(grid_points=grid_points, weak=weak)
        numeric = maximize_holevo_numeric(c, cfg).value
        expected = holevo_closed_form(min(1.0, c_max(c) * fault_scale) * cfg.strength)
        return numeric, expected

    for (c, x), (numeric, expected) in zip(jobs, scheduler.map(run, jobs)):
        suite.record(abs(numeric - expected), lambda: {
            "c": list(c.as_tuple()), "x": x, "expected": expected, "got": numeric,
        })
    return suite


def channel_invariance_suite(rng, samples) -> SuiteResult:
    suite = SuiteResult("channel_invariance", INVARIANCE_TOL)
    p_values = np.round(np.arange(1, 10) * 0.1, 10)
    weak = WeakStrength(1.0)
    inputs = []
    for kind, axis in FLIP_AXIS.items():
        for _ in range(samples):
            c = random_physical_triple(rng).as_array()
            # make the untouched axis the strict maximum
            top = int(np.argmax(np.abs(c)))
            c[[axis, top]] = c[[top, axis]]
            if np.sum(np.abs(c) == np.abs(c[axis])) == 1:
                inputs.append((kind, CorrelationTriple(*c)))
        inputs.append((kind, WernerParams(float(rng.uniform(0, 1))).triple()))

    for kind, c in inputs:
        if not c.is_physical:
            continue
        baseline = measures_under_channel(c, ChannelSpec(kind, 0.0), weak)
        for p in p_values:
            report = measures_under_channel(c, ChannelSpec(kind, float(p)), weak)
            error = max(
                abs(report.maximal_holevo - baseline.maximal_holevo),
                abs(report.classical_correlation - baseline.classical_correlation),
                abs(report.weak_maximal_holevo - baseline.weak_maximal_holevo),
                abs(report.super_classical_correlation - baseline.super_classical_correlation),
            )
            suite.record(error, lambda: {
                "channel": kind.name, "c": list(c.as_tuple()), "p": float(p),
                "expected": baseline.maximal_holevo, "got": report.maximal_holevo,
            })
    return suite


def depolarizing_suite(rng, samples) -> SuiteResult:
    suite = SuiteResult("depolarizing_equivalence", EQUIVALENCE_TOL)
    for _ in range(samples):
        c = random_physical_triple(rng)
        z = _random_direction(rng)
        p = float(rng.uniform(0.01, 0.74))
        report = depolarize_then_project_equivalence(c, z, p)
        suite.record(max(report.max_trace_distance, report.max_probability_gap), lambda: {
            "c": list(c.as_tuple()), "direction": z.as_array().tolist(), "p": p,
            "expected": 0.0, "got": report.max_trace_distance,
        })
    return suite


def _channel_grid() -> List[ChannelSpec]:
    specs = []
    for p in np.linspace(0.05, 0.95, 10):
        for kind in (ChannelKind.BF, ChannelKind.PF, ChannelKind.BPF, ChannelKind.DEPOL1):
            specs.append(ChannelSpec(kind, float(p)))
        for gamma in np.linspace(0.05, 0.95, 10):
            specs.append(ChannelSpec.gad(float(gamma), float(p)))
    return specs


def kraus_suite(rng, samples) -> SuiteResult:
    """Completeness everywhere; closed-form maps against explicit Kraus application"""
    suite = SuiteResult("kraus_completeness", KRAUS_TOL)
    specs = _channel_grid()
    for spec in specs:
        suite.record(kraus_completeness_error(kraus_set(spec)), lambda: {
            "channel": repr(spec), "expected": 0.0,
            "got": kraus_completeness_error(kraus_set(spec)),
        })

    closed = [spec for spec in specs if spec.has_closed_form]
    closed += [ChannelSpec.gad(float(g)) for g in np.linspace(0.05, 0.95, 10)]
    for _ in range(max(1, samples // 10)):
        c = random_physical_triple(rng)
        for spec in closed:
            expected = transformed_c(c, spec).as_array()
            got = transformed_c_explicit(c, spec).as_array()
            suite.record(float(np.max(np.abs(expected - got))), lambda: {
                "channel": repr(spec), "c": list(c.as_tuple()),
                "expected": expected.tolist(), "got": got.tolist(),
            })
    return suite


def weak_operator_suite(rng, samples) -> SuiteResult:
    suite = SuiteResult("weak_operator_properties", KRAUS_TOL)
    for _ in range(samples):
        x = WeakStrength(float(rng.uniform(0.01, 5.0)))
        z = _random_direction(rng)
        plus, minus = weak_operators(x, z)
        error = kraus_completeness_error([plus, minus])
        suite.record(error, lambda: {
            "x": x.x, "direction": z.as_array().tolist(), "expected": 0.0, "got": error,
        })

        pi0, pi1 = direction_projectors(z)
        plus, minus = weak_operators(WeakStrength(20.0), z)
        limit = float(max(np.max(np.abs(plus - pi1)), np.max(np.abs(minus - pi0))))
        suite.record(0.0 if limit < WEAK_LIMIT_TOL else limit, lambda: {
            "x": 20.0, "direction": z.as_array().tolist(), "expected": 0.0, "got": limit,
        })
    return suite


@dataclass
class VerificationReport:
    seed: int
    samples: int
    suites: Dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites.values())

    def first_failure(self) -> Optional[dict]:
        for name, suite in self.suites.items():
            if not suite.passed:
                return {"suite": name, **suite.first_failure}
        return None

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "suites": {name: s.to_dict() for name, s in self.suites.items()},
            "first_failure": self.first_failure(),
        }


def run_verification(
    seed: int,
    samples: int,
    grid_points: int = 20000,
    scheduler: Optional[SweepScheduler] = None,
    fault_scale: float = 1.0,
) -> VerificationReport:
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    scheduler = scheduler or SweepScheduler()
    rng = np.random.default_rng(seed)
    report = VerificationReport(seed, samples)
    for suite in (
        oracle_suite(rng, samples, scheduler, grid_points, fault_scale),
        channel_invariance_suite(rng, samples),
        depolarizing_suite(rng, samples),
        kraus_suite(rng, samples),
        weak_operator_suite(rng, samples),
    ):
        report.suites[suite.name] = suite
        level = logging.INFO if suite.passed else logging.ERROR
        logger.log(level, f"{suite.name}: {'pass' if suite.passed else 'FAIL'} "
                          f"({suite.cases} cases, max error {suite.max_error:.3g})")
    return report

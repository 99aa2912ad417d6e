import logging

import numpy as np
import pytest
from hypothesis import settings, strategies as st
from scipy.stats import unitary_group

from src.models.measurement import MeasurementDirection, UnitaryParams
from src.models.state import CorrelationTriple, DensityMatrix
from src.services.qstate import random_physical_triple

settings.register_profile("numerics", deadline=None)
settings.load_profile("numerics")

unit_interval = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
physical_triples = (
    st.tuples(unit_interval, unit_interval, unit_interval)
    .map(lambda c: CorrelationTriple(*c))
    .filter(lambda c: c.is_physical)
)
werner_z = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
strengths = st.floats(min_value=0.01, max_value=10.0, allow_nan=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20160914)


@pytest.fixture
def random_triples(rng):
    return [random_physical_triple(rng) for _ in range(200)]


def random_unitary_params(rng) -> UnitaryParams:
    return UnitaryParams.normalized(*rng.normal(size=4))


def random_direction(rng) -> MeasurementDirection:
    return MeasurementDirection.normalized(rng.normal(size=3))


def random_density_matrix(rng, dim=4) -> DensityMatrix:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho / np.trace(rho).real)


def random_unitary(rng, dim=4) -> np.ndarray:
    return unitary_group.rvs(dim, random_state=rng)


@pytest.fixture
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)
